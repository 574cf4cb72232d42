#include "conftc/f2.hpp"

#include <algorithm>
#include <bit>

#include "conftc/errors.hpp"

namespace conftc::f2 {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), col_start_(cols + 1, 0) {}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<std::vector<Index>> columns) {
    SparseMatrix m(rows, 0);
    std::vector<Index> reduced;
    for (auto& col : columns) {
        std::sort(col.begin(), col.end());
        reduced.clear();
        for (std::size_t k = 0; k < col.size();) {
            std::size_t run = k;
            while (run < col.size() && col[run] == col[k]) ++run;
            if ((run - k) % 2 == 1) reduced.push_back(col[k]);
            k = run;
        }
        m.append_sorted_column(reduced);
    }
    return m;
}

SparseMatrix SparseMatrix::identity(std::size_t k) {
    SparseMatrix m(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        const Index r = static_cast<Index>(j);
        m.append_sorted_column(std::span<const Index>(&r, 1));
    }
    return m;
}

void SparseMatrix::append_sorted_column(std::span<const Index> column) {
    for (Index r : column) {
        if (r >= rows_) throw InvalidParams("row index out of range");
    }
    entries_.insert(entries_.end(), column.begin(), column.end());
    col_start_.push_back(entries_.size());
}

void SparseMatrix::reserve(std::size_t cols, std::size_t nnz) {
    col_start_.reserve(cols + 1);
    entries_.reserve(nnz);
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
    if (cols() != rhs.rows()) throw DimensionMismatch("matrix product shape mismatch");
    SparseMatrix out(rows_, 0);
    BitAccumulator acc(rows_);
    std::vector<Index> col;
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        for (Index k : rhs.column(j)) acc.flip_all(column(k));
        col.clear();
        acc.drain(col);
        out.append_sorted_column(col);
    }
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<std::uint64_t> counts(rows_ + 1, 0);
    for (Index r : entries_) ++counts[r + 1];
    for (std::size_t r = 0; r < rows_; ++r) counts[r + 1] += counts[r];
    SparseMatrix out(cols(), 0);
    out.col_start_ = counts;
    out.entries_.resize(entries_.size());
    std::vector<std::uint64_t> fill(counts.begin(), counts.end() - 1);
    for (std::size_t j = 0; j < cols(); ++j) {
        for (Index r : column(j)) out.entries_[fill[r]++] = static_cast<Index>(j);
    }
    return out;
}

BitAccumulator::BitAccumulator(std::size_t bits)
    : words_((bits + 63) / 64, 0), summary_((words_.size() + 63) / 64, 0) {}

void BitAccumulator::flip(Index bit) noexcept {
    const std::size_t w = bit >> 6;
    words_[w] ^= std::uint64_t{1} << (bit & 63);
    summary_[w >> 6] |= std::uint64_t{1} << (w & 63);
}

std::int64_t BitAccumulator::highest(std::int64_t from) noexcept {
    if (from < 0) return -1;
    std::int64_t w = from >> 6;
    // partial first word
    std::uint64_t first = words_[static_cast<std::size_t>(w)];
    const int shift = 63 - static_cast<int>(from & 63);
    first = (first << shift) >> shift;
    if (first != 0) return (w << 6) + 63 - std::countl_zero(first);
    --w;
    while (w >= 0) {
        const std::size_t s = static_cast<std::size_t>(w) >> 6;
        std::uint64_t mask = summary_[s];
        const int keep = static_cast<int>(w & 63);
        mask &= (keep == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (keep + 1)) - 1);
        while (mask != 0) {
            const int top = 63 - std::countl_zero(mask);
            const std::size_t word = (s << 6) + static_cast<std::size_t>(top);
            if (words_[word] != 0) {
                return static_cast<std::int64_t>(word << 6) + 63 - std::countl_zero(words_[word]);
            }
            summary_[s] &= ~(std::uint64_t{1} << top);
            mask &= ~(std::uint64_t{1} << top);
        }
        w = static_cast<std::int64_t>(s << 6) - 1;
    }
    return -1;
}

void BitAccumulator::drain(std::vector<Index>& out) {
    for (std::size_t s = 0; s < summary_.size(); ++s) {
        std::uint64_t mask = summary_[s];
        while (mask != 0) {
            const int t = std::countr_zero(mask);
            mask &= mask - 1;
            const std::size_t word = (s << 6) + static_cast<std::size_t>(t);
            std::uint64_t bits = words_[word];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                out.push_back(static_cast<Index>((word << 6) + static_cast<std::size_t>(b)));
            }
            words_[word] = 0;
        }
        summary_[s] = 0;
    }
}

PivotBasis::PivotBasis(std::size_t rows) : pivot_slot_(rows, -1), acc_(rows) {}

PivotBasis PivotBasis::extending(const PivotBasis& parent) {
    PivotBasis layer(parent.rows());
    layer.parent_ = &parent;
    return layer;
}

std::int64_t PivotBasis::reduce(std::span<const Index> column, BitAccumulator& acc) const {
    if (column.empty()) return -1;
    acc.flip_all(column);
    std::int64_t low = column.back();
    while (low >= 0) {
        const PivotBasis* owner = this;
        std::int32_t slot = pivot_slot_[static_cast<std::size_t>(low)];
        if (slot < 0 && parent_ != nullptr) {
            owner = parent_;
            slot = parent_->pivot_slot_[static_cast<std::size_t>(low)];
        }
        if (slot < 0) break;
        const Index* entries = owner->stored_entries_.data();
        for (auto k = owner->stored_start_[slot]; k < owner->stored_start_[slot + 1]; ++k) {
            acc.flip(entries[k]);
        }
        low = acc.highest(low - 1);
    }
    return low;
}

bool PivotBasis::insert(std::span<const Index> column) {
    const std::int64_t low = reduce(column, acc_);
    drained_.clear();
    acc_.drain(drained_);
    if (low < 0) return false;
    const auto slot = static_cast<std::int32_t>(rank());
    stored_entries_.insert(stored_entries_.end(), drained_.begin(), drained_.end());
    stored_start_.push_back(stored_entries_.size());
    pivot_slot_[static_cast<std::size_t>(low)] = slot;
    pivot_rows_.push_back(static_cast<Index>(low));
    return true;
}

bool PivotBasis::contains(std::span<const Index> column) const {
    BitAccumulator acc(rows());
    return reduce(column, acc) < 0;
}

std::size_t PivotBasis::memory_bytes() const noexcept {
    return pivot_slot_.capacity() * sizeof(std::int32_t) +
           stored_start_.capacity() * sizeof(std::uint64_t) +
           stored_entries_.capacity() * sizeof(Index) + pivot_rows_.capacity() * sizeof(Index);
}

PivotBasis reduce_columns(const SparseMatrix& m, std::span<const std::uint8_t> skip) {
    if (!skip.empty() && skip.size() != m.cols()) {
        throw DimensionMismatch("skip mask length differs from column count");
    }
    PivotBasis basis(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!skip.empty() && skip[j]) continue;
        basis.insert(m.column(j));
    }
    return basis;
}

std::size_t rank(const SparseMatrix& m) {
    return reduce_columns(m).rank();
}

}  // namespace conftc::f2
