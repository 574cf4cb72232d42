#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace conftc {

/// Number of disks n and strip width w.
struct ComplexParams {
    int n = 1;
    int w = 1;

    /// Throws InvalidParams unless n >= 1 and w >= 1.
    void validate() const;

    /// n - ceil(n / w), the dimension of cell(n, w).
    int top_dimension() const;

    friend bool operator==(const ComplexParams&, const ComplexParams&) = default;
};

/// A cell of cell(n): an ordering of 1..n cut by bars into nonempty blocks.
///
/// Bar position p (1 <= p <= n-1) sits between labels()[p-1] and labels()[p].
/// Symbols serialize as blocks of space-separated labels joined by '|',
/// e.g. "2 1|3"; that string is the cell's identity.
class Symbol {
public:
    Symbol(std::vector<int> labels, std::vector<int> bar_positions);

    static Symbol from_blocks(const std::vector<std::vector<int>>& blocks);
    static Symbol parse(std::string_view text);

    const std::vector<int>& labels() const noexcept { return labels_; }
    const std::vector<int>& bar_positions() const noexcept { return bars_; }

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    int dimension() const noexcept { return size() - 1 - static_cast<int>(bars_.size()); }
    std::vector<std::vector<int>> blocks() const;
    int max_block_size() const;
    bool belongs_to(const ComplexParams& params) const;

    std::string to_string() const;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;

private:
    std::vector<int> labels_;
    std::vector<int> bars_;
};

/// Strict ordering by serialized string; the order cells are indexed in.
bool serialization_less(const Symbol& a, const Symbol& b);

/// Number of compositions of `total` into exactly `parts` parts, each in [1, max_part].
std::uint64_t count_compositions(int total, int parts, int max_part);

/// Number of d-cells of cell(n, w): n! times the compositions of n into n-d parts of size <= w.
std::uint64_t count_cells(const ComplexParams& params, int d);

/// All d-cells of cell(n, w), ordered by serialization.
std::vector<Symbol> enumerate_cells(const ComplexParams& params, int d);

/// All order-preserving interleavings of two nonempty disjoint label sequences.
std::vector<std::vector<int>> shuffles(const std::vector<int>& left, const std::vector<int>& right);

/// Cells of dimension dim(s)+1 obtained by deleting one bar of s and shuffling
/// the merged block; merges producing a block larger than w are omitted.
std::vector<Symbol> cofaces(const Symbol& s, const ComplexParams& params);

/// Codimension-one faces: every block of size >= 2 split into an ordered pair
/// of complementary nonempty subsequences. One entry per split.
std::vector<Symbol> faces(const Symbol& s, const ComplexParams& params);

}  // namespace conftc
