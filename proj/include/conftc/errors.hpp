#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conftc {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// The estimated footprint of a complex exceeds the configured budget.
class ResourceLimit : public Error {
public:
    ResourceLimit(std::size_t dimension, std::size_t cell_count, std::size_t estimated_bytes,
                  std::size_t budget_bytes);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t cell_count() const noexcept { return cell_count_; }
    std::size_t estimated_bytes() const noexcept { return estimated_bytes_; }

private:
    std::size_t dimension_;
    std::size_t cell_count_;
    std::size_t estimated_bytes_;
};

class NotACycle : public Error {
public:
    NotACycle(std::size_t vector_index, std::size_t dimension);
    std::size_t vector_index() const noexcept { return vector_index_; }

private:
    std::size_t vector_index_;
};

class WheelTooSmall : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// No certificate exists for these parameters (n = 1 or w = 1).
class NotApplicable : public Error {
public:
    using Error::Error;
};

/// A torus construction produced factors that do not partition a label set.
class ConstructionError : public Error {
public:
    using Error::Error;
};

class UnknownSpace : public Error {
public:
    using Error::Error;
};

}  // namespace conftc
