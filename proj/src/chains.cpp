#include "conftc/chains.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "conftc/errors.hpp"

namespace conftc {

namespace {

constexpr int kMaxDisks = 12;

// Rough per-entry reduction overhead: stored residues typically stay within a
// small multiple of the original column lengths.
constexpr std::size_t kReductionFillFactor = 3;

std::vector<std::uint64_t> factorials(int n) {
    std::vector<std::uint64_t> f(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 2; k <= n; ++k) f[k] = f[k - 1] * static_cast<std::uint64_t>(k);
    return f;
}

// Block sizes of the composition encoded by a bar mask over n labels.
template <typename F>
void for_each_block(int n, std::uint32_t mask, F&& f) {
    int start = 0;
    for (int p = 1; p < n; ++p) {
        if ((mask >> (p - 1)) & 1u) {
            f(start, p - start);
            start = p;
        }
    }
    f(start, n - start);
}

int widest_block(int n, std::uint32_t mask) {
    int best = 0;
    for_each_block(n, mask, [&](int, int size) { best = std::max(best, size); });
    return best;
}

struct DimensionShape {
    std::vector<std::uint32_t> masks;  // bar masks of valid compositions
    std::uint64_t faces_per_permutation = 0;
};

std::vector<DimensionShape> shapes_of(const ComplexParams& p) {
    const int top = p.top_dimension();
    std::vector<DimensionShape> shapes(static_cast<std::size_t>(top) + 1);
    for (std::uint32_t mask = 0; mask < (1u << (p.n - 1)); ++mask) {
        if (widest_block(p.n, mask) > p.w) continue;
        const int d = p.n - 1 - std::popcount(mask);
        auto& shape = shapes[static_cast<std::size_t>(d)];
        shape.masks.push_back(mask);
        for_each_block(p.n, mask, [&](int, int size) {
            shape.faces_per_permutation += (std::uint64_t{1} << size) - 2;
        });
    }
    return shapes;
}

std::size_t dimension_footprint(std::uint64_t cells, std::uint64_t nnz) {
    // order + inverse order tables, column offsets, matrix entries, reduction
    return static_cast<std::size_t>(cells * (4 + 4 + 8 + 4) +
                                    nnz * sizeof(f2::Index) * (1 + kReductionFillFactor));
}

void check_supported(const ComplexParams& p) {
    p.validate();
    if (p.n > kMaxDisks) {
        throw InvalidParams("cell complexes are supported for n <= " + std::to_string(kMaxDisks));
    }
}

}  // namespace

std::size_t estimate_footprint(const ComplexParams& params) {
    check_supported(params);
    const auto fact = factorials(params.n);
    std::size_t total = 0;
    for (const auto& shape : shapes_of(params)) {
        total += dimension_footprint(fact[params.n] * shape.masks.size(),
                                     fact[params.n] * shape.faces_per_permutation);
    }
    return total;
}

struct ChainComplexF2::DimensionTable {
    std::vector<std::uint32_t> masks;
    std::vector<std::uint32_t> order;    // position -> raw id
    std::vector<std::uint32_t> rank_of;  // raw id -> position

    std::size_t size() const noexcept { return order.size(); }
};

struct ChainComplexF2::Reductions {
    std::once_flag once;
    std::vector<f2::PivotBasis> bases;  // bases[d] reduces boundary(d); [0] empty
};

ChainComplexF2::ChainComplexF2(ChainComplexF2&&) noexcept = default;
ChainComplexF2& ChainComplexF2::operator=(ChainComplexF2&&) noexcept = default;
ChainComplexF2::~ChainComplexF2() = default;

namespace {

std::uint64_t permutation_rank(std::span<const int> labels, const std::vector<std::uint64_t>& fact) {
    const int n = static_cast<int>(labels.size());
    std::uint64_t rank = 0;
    std::uint32_t used = 0;
    for (int k = 0; k < n; ++k) {
        const std::uint32_t below = (1u << (labels[k] - 1)) - 1;
        const int smaller_unused = labels[k] - 1 - std::popcount(used & below);
        rank += static_cast<std::uint64_t>(smaller_unused) * fact[n - 1 - k];
        used |= 1u << (labels[k] - 1);
    }
    return rank;
}

void permutation_unrank(std::uint64_t rank, int n, const std::vector<std::uint64_t>& fact,
                        std::span<int> out) {
    std::uint32_t used = 0;
    for (int k = 0; k < n; ++k) {
        std::uint64_t q = rank / fact[n - 1 - k];
        rank %= fact[n - 1 - k];
        for (int label = 1; label <= n; ++label) {
            if (used & (1u << (label - 1))) continue;
            if (q == 0) {
                out[k] = label;
                used |= 1u << (label - 1);
                break;
            }
            --q;
        }
    }
}

// Packs l1 s1 l2 s2 ... ln (label, separator) so that integer order matches
// serialized string order; valid when all labels are single digits.
std::uint64_t serial_key(std::span<const int> labels, std::uint32_t mask) {
    std::uint64_t key = 0;
    const int n = static_cast<int>(labels.size());
    for (int k = 0; k < n; ++k) {
        const std::uint64_t sep = (k + 1 < n && ((mask >> k) & 1u)) ? 1 : 0;
        key = (key << 5) | (static_cast<std::uint64_t>(labels[k]) << 1) | sep;
    }
    return key;
}

Symbol symbol_of(std::span<const int> labels, std::uint32_t mask) {
    std::vector<int> bars;
    for (int p = 1; p < static_cast<int>(labels.size()); ++p) {
        if ((mask >> (p - 1)) & 1u) bars.push_back(p);
    }
    return Symbol(std::vector<int>(labels.begin(), labels.end()), std::move(bars));
}

}  // namespace

std::uint64_t ChainComplexF2::raw_id(std::span<const int> labels, std::uint32_t bar_mask,
                                     int d) const {
    const auto& table = dims_[static_cast<std::size_t>(d)];
    return permutation_rank(labels, factorial_) * table.masks.size() +
           static_cast<std::uint64_t>(composition_id_[bar_mask]);
}

ChainComplexF2 ChainComplexF2::build(const ComplexParams& params, const BuildOptions& options) {
    check_supported(params);
    const int n = params.n;
    ChainComplexF2 c;
    c.params_ = params;
    c.factorial_ = factorials(n);
    const auto shapes = shapes_of(params);

    std::size_t running = 0;
    for (std::size_t d = 0; d < shapes.size(); ++d) {
        const std::uint64_t cells = c.factorial_[n] * shapes[d].masks.size();
        running += dimension_footprint(cells, c.factorial_[n] * shapes[d].faces_per_permutation);
        if (running > options.memory_budget_bytes || cells > UINT32_MAX) {
            throw ResourceLimit(d, cells, running, options.memory_budget_bytes);
        }
    }

    c.composition_id_.assign(std::size_t{1} << (n - 1), -1);
    c.dims_.resize(shapes.size());
    c.top_ = static_cast<int>(shapes.size()) - 1;
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (std::size_t d = 0; d < shapes.size(); ++d) {
        auto& table = c.dims_[d];
        table.masks = shapes[d].masks;
        for (std::size_t k = 0; k < table.masks.size(); ++k) {
            c.composition_id_[table.masks[k]] = static_cast<std::int32_t>(k);
        }
        const std::uint64_t ncomp = table.masks.size();
        const std::uint64_t count = c.factorial_[n] * ncomp;
        table.order.resize(count);
        std::iota(table.order.begin(), table.order.end(), 0u);
        if (n <= 9) {
            std::vector<std::uint64_t> keys(count);
            for (std::uint64_t perm = 0; perm < c.factorial_[n]; ++perm) {
                permutation_unrank(perm, n, c.factorial_, labels);
                for (std::uint64_t k = 0; k < ncomp; ++k) {
                    keys[perm * ncomp + k] = serial_key(labels, table.masks[k]);
                }
            }
            std::sort(table.order.begin(), table.order.end(),
                      [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
        } else {
            std::vector<std::string> keys(count);
            for (std::uint64_t raw = 0; raw < count; ++raw) {
                permutation_unrank(raw / ncomp, n, c.factorial_, labels);
                keys[raw] = symbol_of(labels, table.masks[raw % ncomp]).to_string();
            }
            std::sort(table.order.begin(), table.order.end(),
                      [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
        }
        table.rank_of.resize(count);
        for (std::uint32_t pos = 0; pos < count; ++pos) table.rank_of[table.order[pos]] = pos;
    }

    c.boundaries_.resize(shapes.size());
    std::vector<int> face(static_cast<std::size_t>(n));
    std::vector<f2::Index> column;
    for (std::size_t d = 1; d < shapes.size(); ++d) {
        const auto& table = c.dims_[d];
        const auto& below = c.dims_[d - 1];
        const std::uint64_t ncomp = table.masks.size();
        f2::SparseMatrix m(below.size(), 0);
        m.reserve(table.size(), c.factorial_[n] * shapes[d].faces_per_permutation);
        for (std::size_t j = 0; j < table.size(); ++j) {
            const std::uint32_t raw = table.order[j];
            permutation_unrank(raw / ncomp, n, c.factorial_, labels);
            const std::uint32_t mask = table.masks[raw % ncomp];
            column.clear();
            for_each_block(n, mask, [&](int start, int size) {
                if (size < 2) return;
                std::copy(labels.begin(), labels.end(), face.begin());
                for (std::uint32_t sub = 1; sub + 1 < (1u << size); ++sub) {
                    int front = start;
                    int back = start + std::popcount(sub);
                    for (int t = 0; t < size; ++t) {
                        face[(sub >> t) & 1u ? front++ : back++] = labels[start + t];
                    }
                    const std::uint32_t split = 1u << (start + std::popcount(sub) - 1);
                    const std::uint64_t face_raw = c.raw_id(face, mask | split, static_cast<int>(d) - 1);
                    column.push_back(below.rank_of[face_raw]);
                }
            });
            std::sort(column.begin(), column.end());
            m.append_sorted_column(column);
        }
        c.boundaries_[d] = std::move(m);
    }

    if (options.verify_boundary_squared) {
        for (std::size_t d = 2; d < shapes.size(); ++d) {
            if (!c.boundaries_[d - 1].multiply(c.boundaries_[d]).is_zero()) {
                c.boundary_squared_zero_ = false;
                throw Error("boundary of boundary is nonzero in dimension " + std::to_string(d));
            }
        }
    }
    c.reductions_ = std::make_unique<Reductions>();
    return c;
}

std::size_t ChainComplexF2::cell_count(int d) const {
    if (d < 0 || d > top_dimension()) return 0;
    return dims_[static_cast<std::size_t>(d)].size();
}

std::vector<std::size_t> ChainComplexF2::cell_counts() const {
    std::vector<std::size_t> out;
    for (const auto& t : dims_) out.push_back(t.size());
    return out;
}

Symbol ChainComplexF2::cell(int d, std::size_t index) const {
    if (d < 0 || d > top_dimension() || index >= cell_count(d)) {
        throw InvalidParams("cell index out of range");
    }
    const auto& table = dims_[static_cast<std::size_t>(d)];
    const std::uint32_t raw = table.order[index];
    std::vector<int> labels(static_cast<std::size_t>(params_.n));
    permutation_unrank(raw / table.masks.size(), params_.n, factorial_, labels);
    return symbol_of(labels, table.masks[raw % table.masks.size()]);
}

std::optional<std::size_t> ChainComplexF2::index_of(const Symbol& s) const {
    if (!s.belongs_to(params_)) return std::nullopt;
    const int d = s.dimension();
    if (d > top_dimension()) return std::nullopt;
    std::uint32_t mask = 0;
    for (int p : s.bar_positions()) mask |= 1u << (p - 1);
    const auto raw = raw_id(s.labels(), mask, d);
    return dims_[static_cast<std::size_t>(d)].rank_of[raw];
}

const f2::SparseMatrix& ChainComplexF2::boundary(int d) const {
    if (d < 1 || d > top_dimension()) throw InvalidParams("no boundary in dimension " + std::to_string(d));
    return boundaries_[static_cast<std::size_t>(d)];
}

ChainVector ChainComplexF2::boundary_of(const ChainVector& v) const {
    ChainVector out{v.dimension - 1, {}};
    if (v.dimension < 1 || v.dimension > top_dimension()) return out;
    const auto& m = boundary(v.dimension);
    f2::BitAccumulator acc(m.rows());
    for (auto j : v.support) {
        if (j >= m.cols()) throw InvalidParams("chain index out of range");
        acc.flip_all(m.column(j));
    }
    acc.drain(out.support);
    return out;
}

ChainVector ChainComplexF2::chain_of(std::span<const Symbol> cells) const {
    if (cells.empty()) throw InvalidParams("empty cell list has no dimension");
    ChainVector out{cells.front().dimension(), {}};
    std::vector<f2::Index> raw;
    for (const auto& s : cells) {
        const auto idx = index_of(s);
        if (!idx || s.dimension() != out.dimension) {
            throw InvalidParams("symbol " + s.to_string() + " is not a cell of the expected dimension");
        }
        raw.push_back(static_cast<f2::Index>(*idx));
    }
    std::sort(raw.begin(), raw.end());
    for (std::size_t k = 0; k < raw.size();) {
        std::size_t run = k;
        while (run < raw.size() && raw[run] == raw[k]) ++run;
        if ((run - k) % 2 == 1) out.support.push_back(raw[k]);
        k = run;
    }
    return out;
}

void ChainComplexF2::ensure_reduced() const {
    std::call_once(reductions_->once, [this] {
        const int top = top_dimension();
        std::vector<f2::PivotBasis> bases;
        bases.reserve(static_cast<std::size_t>(top) + 1);
        for (int d = 0; d <= top; ++d) bases.emplace_back(cell_count(d - 1 < 0 ? 0 : d - 1));
        // Top-down: columns of boundary(d) that are pivot rows of the reduced
        // boundary(d+1) are boundaries, hence reduce to zero; skip them.
        for (int d = top; d >= 1; --d) {
            std::vector<std::uint8_t> skip(cell_count(d), 0);
            if (d < top) {
                for (auto row : bases[static_cast<std::size_t>(d) + 1].pivot_rows()) skip[row] = 1;
            }
            bases[static_cast<std::size_t>(d)] = f2::reduce_columns(boundaries_[static_cast<std::size_t>(d)], skip);
        }
        reductions_->bases = std::move(bases);
    });
}

std::size_t ChainComplexF2::boundary_rank(int d) const {
    if (d < 1 || d > top_dimension()) return 0;
    return reduced_boundary(d).rank();
}

const f2::PivotBasis& ChainComplexF2::reduced_boundary(int d) const {
    if (d < 1 || d > top_dimension()) throw InvalidParams("no boundary in dimension " + std::to_string(d));
    ensure_reduced();
    return reductions_->bases[static_cast<std::size_t>(d)];
}

std::size_t ChainComplexF2::memory_bytes() const {
    std::size_t total = composition_id_.capacity() * sizeof(std::int32_t);
    for (const auto& t : dims_) total += (t.order.capacity() + t.rank_of.capacity()) * 4;
    for (const auto& m : boundaries_) total += m.memory_bytes();
    if (reductions_) {
        for (const auto& b : reductions_->bases) total += b.memory_bytes();
    }
    return total;
}

std::vector<std::size_t> betti(const ChainComplexF2& complex) {
    std::vector<std::size_t> out;
    for (int d = 0; d <= complex.top_dimension(); ++d) {
        out.push_back(complex.cell_count(d) - complex.boundary_rank(d) - complex.boundary_rank(d + 1));
    }
    return out;
}

long long euler_characteristic(std::span<const std::size_t> counts) {
    long long chi = 0;
    for (std::size_t d = 0; d < counts.size(); ++d) {
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[d]);
    }
    return chi;
}

bool classes_independent(std::span<const ChainVector> cycles, const ChainComplexF2& complex) {
    if (cycles.empty()) return true;
    const int d = cycles.front().dimension;
    for (std::size_t k = 0; k < cycles.size(); ++k) {
        if (cycles[k].dimension != d) throw DimensionMismatch("cycles must share one dimension");
        if (d < 0 || d > complex.top_dimension()) {
            throw InvalidParams("cycle dimension outside the complex");
        }
        if (!complex.boundary_of(cycles[k]).support.empty()) throw NotACycle(k, static_cast<std::size_t>(d));
    }
    if (d + 1 <= complex.top_dimension()) {
        auto layer = f2::PivotBasis::extending(complex.reduced_boundary(d + 1));
        for (const auto& v : cycles) {
            if (!layer.insert(v.support)) return false;
        }
        return true;
    }
    f2::PivotBasis basis(complex.cell_count(d));
    for (const auto& v : cycles) {
        if (!basis.insert(v.support)) return false;
    }
    return true;
}

}  // namespace conftc
