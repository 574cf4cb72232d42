#include "conftc/symbols.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "conftc/errors.hpp"

namespace conftc {

void ComplexParams::validate() const {
    if (n < 1 || w < 1) {
        throw InvalidParams("invalid params: need n >= 1 and w >= 1, got n=" + std::to_string(n) +
                            " w=" + std::to_string(w));
    }
}

int ComplexParams::top_dimension() const {
    validate();
    return n - (n + w - 1) / w;
}

Symbol::Symbol(std::vector<int> labels, std::vector<int> bar_positions)
    : labels_(std::move(labels)), bars_(std::move(bar_positions)) {
    const int n = size();
    if (n < 1) throw InvalidParams("symbol needs at least one label");
    std::vector<bool> seen(n + 1, false);
    for (int x : labels_) {
        if (x < 1 || x > n || seen[x]) {
            throw InvalidParams("symbol labels must be a permutation of 1..n");
        }
        seen[x] = true;
    }
    for (std::size_t k = 0; k < bars_.size(); ++k) {
        if (bars_[k] < 1 || bars_[k] > n - 1 || (k > 0 && bars_[k] <= bars_[k - 1])) {
            throw InvalidParams("bar positions must be strictly increasing within 1..n-1");
        }
    }
}

Symbol Symbol::from_blocks(const std::vector<std::vector<int>>& blocks) {
    std::vector<int> labels;
    std::vector<int> bars;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw InvalidParams("symbol blocks must be nonempty");
        if (b > 0) bars.push_back(static_cast<int>(labels.size()));
        labels.insert(labels.end(), blocks[b].begin(), blocks[b].end());
    }
    return Symbol(std::move(labels), std::move(bars));
}

Symbol Symbol::parse(std::string_view text) {
    std::vector<std::vector<int>> blocks(1);
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == ' ') {
            ++pos;
        } else if (c == '|') {
            blocks.emplace_back();
            ++pos;
        } else {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
            if (ec != std::errc{}) {
                throw InvalidParams("cannot parse symbol '" + std::string(text) + "'");
            }
            blocks.back().push_back(value);
            pos = static_cast<std::size_t>(ptr - text.data());
        }
    }
    return from_blocks(blocks);
}

std::vector<std::vector<int>> Symbol::blocks() const {
    std::vector<std::vector<int>> out;
    int start = 0;
    auto emit = [&](int end) {
        out.emplace_back(labels_.begin() + start, labels_.begin() + end);
        start = end;
    };
    for (int b : bars_) emit(b);
    emit(size());
    return out;
}

int Symbol::max_block_size() const {
    int best = 0;
    int start = 0;
    for (int b : bars_) {
        best = std::max(best, b - start);
        start = b;
    }
    return std::max(best, size() - start);
}

bool Symbol::belongs_to(const ComplexParams& params) const {
    return size() == params.n && max_block_size() <= params.w;
}

std::string Symbol::to_string() const {
    std::string out;
    std::size_t bar = 0;
    for (int k = 0; k < size(); ++k) {
        if (k > 0) {
            if (bar < bars_.size() && bars_[bar] == k) {
                out += '|';
                ++bar;
            } else {
                out += ' ';
            }
        }
        out += std::to_string(labels_[k]);
    }
    return out;
}

bool serialization_less(const Symbol& a, const Symbol& b) {
    return a.to_string() < b.to_string();
}

std::uint64_t count_compositions(int total, int parts, int max_part) {
    if (parts < 0 || total < 0 || max_part < 1) return 0;
    // ways[p][t]: compositions of t into p parts
    std::vector<std::uint64_t> ways(total + 1, 0);
    ways[0] = 1;
    for (int p = 0; p < parts; ++p) {
        std::vector<std::uint64_t> next(total + 1, 0);
        for (int t = 0; t <= total; ++t) {
            if (ways[t] == 0) continue;
            for (int k = 1; k <= max_part && t + k <= total; ++k) next[t + k] += ways[t];
        }
        ways = std::move(next);
    }
    return ways[total];
}

std::uint64_t count_cells(const ComplexParams& params, int d) {
    params.validate();
    if (d < 0 || d > params.n - 1) return 0;
    std::uint64_t factorial = 1;
    for (int k = 2; k <= params.n; ++k) factorial *= static_cast<std::uint64_t>(k);
    return factorial * count_compositions(params.n, params.n - d, params.w);
}

namespace {

void collect_compositions(int remaining, int parts_left, int max_part, std::vector<int>& current,
                          std::vector<std::vector<int>>& out) {
    if (parts_left == 0) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    for (int k = 1; k <= max_part && k <= remaining - (parts_left - 1); ++k) {
        current.push_back(k);
        collect_compositions(remaining - k, parts_left - 1, max_part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Symbol> enumerate_cells(const ComplexParams& params, int d) {
    params.validate();
    if (d < 0 || d > params.n - 1) {
        throw InvalidParams("dimension " + std::to_string(d) + " outside 0..n-1");
    }
    std::vector<std::vector<int>> compositions;
    std::vector<int> scratch;
    collect_compositions(params.n, params.n - d, params.w, scratch, compositions);

    std::vector<std::pair<std::string, Symbol>> keyed;
    std::vector<int> perm(params.n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (const auto& comp : compositions) {
            std::vector<int> bars;
            int pos = 0;
            for (std::size_t k = 0; k + 1 < comp.size(); ++k) {
                pos += comp[k];
                bars.push_back(pos);
            }
            Symbol s(perm, std::move(bars));
            keyed.emplace_back(s.to_string(), std::move(s));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Symbol> out;
    out.reserve(keyed.size());
    for (auto& [key, s] : keyed) out.push_back(std::move(s));
    return out;
}

std::vector<std::vector<int>> shuffles(const std::vector<int>& left, const std::vector<int>& right) {
    if (left.empty() || right.empty()) throw InvalidParams("shuffle blocks must be nonempty");
    const std::size_t total = left.size() + right.size();
    std::vector<std::vector<int>> out;
    // choose which slots take the left sequence
    std::vector<bool> from_left(total, false);
    std::fill(from_left.begin(), from_left.begin() + static_cast<long>(left.size()), true);
    do {
        std::vector<int> merged;
        merged.reserve(total);
        std::size_t a = 0, b = 0;
        for (bool take_left : from_left) merged.push_back(take_left ? left[a++] : right[b++]);
        out.push_back(std::move(merged));
    } while (std::prev_permutation(from_left.begin(), from_left.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Symbol> cofaces(const Symbol& s, const ComplexParams& params) {
    params.validate();
    if (!s.belongs_to(params)) throw InvalidParams("symbol " + s.to_string() + " is not a cell");
    const auto blocks = s.blocks();
    std::vector<Symbol> out;
    for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
        if (static_cast<int>(blocks[b].size() + blocks[b + 1].size()) > params.w) continue;
        for (auto& merged : shuffles(blocks[b], blocks[b + 1])) {
            std::vector<std::vector<int>> next;
            next.reserve(blocks.size() - 1);
            next.insert(next.end(), blocks.begin(), blocks.begin() + static_cast<long>(b));
            next.push_back(std::move(merged));
            next.insert(next.end(), blocks.begin() + static_cast<long>(b) + 2, blocks.end());
            out.push_back(Symbol::from_blocks(next));
        }
    }
    return out;
}

std::vector<Symbol> faces(const Symbol& s, const ComplexParams& params) {
    params.validate();
    if (!s.belongs_to(params)) throw InvalidParams("symbol " + s.to_string() + " is not a cell");
    const auto blocks = s.blocks();
    std::vector<Symbol> out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& block = blocks[b];
        const std::size_t k = block.size();
        if (k < 2) continue;
        for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
            std::vector<int> first, second;
            for (std::size_t t = 0; t < k; ++t) {
                ((mask >> t) & 1u ? first : second).push_back(block[t]);
            }
            std::vector<std::vector<int>> next(blocks.begin(), blocks.begin() + static_cast<long>(b));
            next.push_back(std::move(first));
            next.push_back(std::move(second));
            next.insert(next.end(), blocks.begin() + static_cast<long>(b) + 1, blocks.end());
            out.push_back(Symbol::from_blocks(next));
        }
    }
    return out;
}

}  // namespace conftc
