#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

namespace conftc {

using Rational = boost::multiprecision::cpp_rational;

/// Rank of a dense rational matrix (rows of equal length) by exact elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace conftc
