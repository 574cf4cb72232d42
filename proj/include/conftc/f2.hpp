#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace conftc::f2 {

using Index = std::uint32_t;

/// Sparse matrix over the two-element field in compressed-column form.
/// Row indices inside a column are strictly increasing.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    /// Columns given as arbitrary row lists; repeated entries cancel in pairs.
    static SparseMatrix from_columns(std::size_t rows, std::vector<std::vector<Index>> columns);
    static SparseMatrix identity(std::size_t k);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return col_start_.size() - 1; }
    std::size_t nnz() const noexcept { return entries_.size(); }

    std::span<const Index> column(std::size_t j) const {
        return {entries_.data() + col_start_[j], entries_.data() + col_start_[j + 1]};
    }

    /// Appends a column whose entries are already sorted and distinct.
    void append_sorted_column(std::span<const Index> column);
    void reserve(std::size_t cols, std::size_t nnz);

    /// this * rhs over the two-element field.
    SparseMatrix multiply(const SparseMatrix& rhs) const;
    SparseMatrix transpose() const;
    bool is_zero() const noexcept { return entries_.empty(); }

    std::size_t memory_bytes() const noexcept {
        return entries_.capacity() * sizeof(Index) + col_start_.capacity() * sizeof(std::uint64_t);
    }

private:
    std::size_t rows_ = 0;
    std::vector<std::uint64_t> col_start_{0};
    std::vector<Index> entries_;
};

/// Packed bit vector with a one-bit-per-word summary, so that finding the
/// highest set bit and draining the vector cost time proportional to the
/// number of touched words rather than the length.
class BitAccumulator {
public:
    explicit BitAccumulator(std::size_t bits);

    void flip(Index bit) noexcept;
    void flip_all(std::span<const Index> bits) noexcept {
        for (Index b : bits) flip(b);
    }
    /// Highest set bit at or below `from`, or -1.
    std::int64_t highest(std::int64_t from) noexcept;
    /// Appends set bits in increasing order to `out` and clears the vector.
    void drain(std::vector<Index>& out);

private:
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> summary_;
};

/// Incremental column echelon basis keyed by lowest (largest) row index.
///
/// Each stored column has a distinct pivot row. The working column is a
/// packed bit accumulator; stored columns are sparse.
class PivotBasis {
public:
    explicit PivotBasis(std::size_t rows);

    /// A basis layered over `parent`: reductions also use the parent's
    /// columns, new columns are stored here. `parent` must outlive it.
    static PivotBasis extending(const PivotBasis& parent);

    std::size_t rows() const noexcept { return pivot_slot_.size(); }
    /// Columns stored in this layer, not counting a parent.
    std::size_t rank() const noexcept { return stored_start_.size() - 1; }

    /// Reduces `column` (sorted, distinct) against the basis. Returns true and
    /// stores the residue when it is nonzero.
    bool insert(std::span<const Index> column);

    /// True when `column` lies in the span of the stored columns.
    bool contains(std::span<const Index> column) const;

    /// Rows that carry a pivot, in insertion order.
    const std::vector<Index>& pivot_rows() const noexcept { return pivot_rows_; }

    std::size_t memory_bytes() const noexcept;

private:
    std::int64_t reduce(std::span<const Index> column, BitAccumulator& acc) const;

    const PivotBasis* parent_ = nullptr;
    std::vector<std::int32_t> pivot_slot_;
    std::vector<std::uint64_t> stored_start_{0};
    std::vector<Index> stored_entries_;
    std::vector<Index> pivot_rows_;
    BitAccumulator acc_;
    std::vector<Index> drained_;
};

/// Reduces every column of `m`; columns flagged in `skip` are treated as
/// already reduced to zero. `skip` is empty or has one flag per column.
PivotBasis reduce_columns(const SparseMatrix& m, std::span<const std::uint8_t> skip = {});

/// Rank over the two-element field.
std::size_t rank(const SparseMatrix& m);

}  // namespace conftc::f2
