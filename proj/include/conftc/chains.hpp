#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "conftc/f2.hpp"
#include "conftc/symbols.hpp"

namespace conftc {

/// A chain with coefficients in the two-element field: a set of d-cell indices.
struct ChainVector {
    int dimension = 0;
    std::vector<f2::Index> support;  // sorted, distinct

    friend bool operator==(const ChainVector&, const ChainVector&) = default;
};

struct BuildOptions {
    /// Cap on the estimated footprint of cell tables, boundary matrices and
    /// their reductions.
    std::size_t memory_budget_bytes = std::size_t{4} << 30;
    /// Multiply consecutive boundaries during construction and fail if any
    /// product is nonzero.
    bool verify_boundary_squared = true;
};

/// Estimated bytes needed to build cell(n, w) and reduce its boundaries.
std::size_t estimate_footprint(const ComplexParams& params);

/// The cellular chain complex of cell(n, w) over the two-element field.
///
/// Cells of each dimension are indexed in serialization order. Boundary
/// ranks are computed on first use (top dimension first, skipping columns
/// already known to reduce to zero) and cached; concurrent readers are safe.
class ChainComplexF2 {
public:
    static ChainComplexF2 build(const ComplexParams& params, const BuildOptions& options = {});

    ChainComplexF2(ChainComplexF2&&) noexcept;
    ChainComplexF2& operator=(ChainComplexF2&&) noexcept;
    ~ChainComplexF2();

    const ComplexParams& params() const noexcept { return params_; }
    int top_dimension() const noexcept { return top_; }

    std::size_t cell_count(int d) const;
    std::vector<std::size_t> cell_counts() const;
    Symbol cell(int d, std::size_t index) const;
    std::optional<std::size_t> index_of(const Symbol& s) const;

    /// Boundary from dimension d to d-1, for 1 <= d <= top_dimension().
    const f2::SparseMatrix& boundary(int d) const;
    ChainVector boundary_of(const ChainVector& v) const;
    ChainVector chain_of(std::span<const Symbol> cells) const;

    /// True when every product boundary(d-1) * boundary(d) vanished.
    bool boundary_squared_zero() const noexcept { return boundary_squared_zero_; }

    /// Rank of boundary(d); zero outside 1..top_dimension().
    std::size_t boundary_rank(int d) const;

    /// Echelon basis of the column space of boundary(d).
    const f2::PivotBasis& reduced_boundary(int d) const;

    std::size_t memory_bytes() const;

private:
    struct DimensionTable;
    struct Reductions;

    ChainComplexF2() = default;
    void ensure_reduced() const;
    std::uint64_t raw_id(std::span<const int> labels, std::uint32_t bar_mask, int d) const;

    ComplexParams params_;
    int top_ = 0;
    std::vector<std::uint64_t> factorial_;
    std::vector<std::int32_t> composition_id_;  // bar mask -> id within its dimension
    std::vector<DimensionTable> dims_;
    std::vector<f2::SparseMatrix> boundaries_;  // index d holds boundary(d); [0] unused
    bool boundary_squared_zero_ = true;
    std::unique_ptr<Reductions> reductions_;
};

/// b_d = #d-cells - rank boundary(d) - rank boundary(d+1).
std::vector<std::size_t> betti(const ChainComplexF2& complex);

long long euler_characteristic(std::span<const std::size_t> counts);

/// True iff the given d-cycles are linearly independent in H_d over the
/// two-element field. Throws NotACycle naming the first vector with a
/// nonzero boundary.
bool classes_independent(std::span<const ChainVector> cycles, const ChainComplexF2& complex);

}  // namespace conftc
