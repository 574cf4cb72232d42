#include "conftc/wheels.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>

#include "conftc/errors.hpp"

namespace conftc {

Wheel::Wheel(std::vector<int> disks) : disks_(std::move(disks)) {
    if (disks_.empty()) throw InvalidParams("a wheel needs at least one disk");
    auto sorted = disks_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidParams("wheel disks must be distinct positive labels");
    }
}

int Wheel::max_label() const {
    return *std::max_element(disks_.begin(), disks_.end());
}

bool Wheel::is_canonical() const {
    return disks_.front() == max_label();
}

std::string Wheel::to_string() const {
    std::string out = "W(";
    for (std::size_t k = 0; k < disks_.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(disks_[k]);
    }
    return out + ')';
}

std::weak_ordering rank_compare(const Wheel& a, const Wheel& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.max_label() <=> b.max_label();
}

WheelProduct::WheelProduct(std::vector<Wheel> factors, ComplexParams ambient)
    : factors_(std::move(factors)), ambient_(ambient) {
    ambient_.validate();
    std::uint32_t seen = 0;
    for (const auto& wheel : factors_) {
        if (wheel.size() > ambient_.w) {
            throw InvalidParams(wheel.to_string() + " has more than w=" + std::to_string(ambient_.w) +
                                " disks");
        }
        for (int d : wheel.disks()) {
            if (d > ambient_.n) {
                throw InvalidParams("disk " + std::to_string(d) + " exceeds n=" + std::to_string(ambient_.n));
            }
            const std::uint32_t bit = 1u << (d - 1);
            if (seen & bit) throw InvalidParams("disk " + std::to_string(d) + " appears in two wheels");
            seen |= bit;
        }
    }
}

WheelProduct WheelProduct::parse(std::string_view text, ComplexParams ambient) {
    std::vector<Wheel> factors;
    std::size_t pos = 0;
    auto fail = [&] { throw InvalidParams("cannot parse wheel product '" + std::string(text) + "'"); };
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (text.substr(pos, 2) != "W(") fail();
        pos += 2;
        std::vector<int> disks;
        while (true) {
            while (pos < text.size() && text[pos] == ' ') ++pos;
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
            if (ec != std::errc{}) fail();
            disks.push_back(value);
            pos = static_cast<std::size_t>(ptr - text.data());
            while (pos < text.size() && text[pos] == ' ') ++pos;
            if (pos >= text.size()) fail();
            if (text[pos] == ',') {
                ++pos;
            } else if (text[pos] == ')') {
                ++pos;
                break;
            } else {
                fail();
            }
        }
        factors.emplace_back(std::move(disks));
    }
    return WheelProduct(std::move(factors), ambient);
}

int WheelProduct::torus_dimension() const {
    int dim = 0;
    for (const auto& w : factors_) dim += w.torus_dimension();
    return dim;
}

std::uint32_t WheelProduct::disk_mask() const {
    std::uint32_t mask = 0;
    for (const auto& w : factors_) {
        for (int d : w.disks()) mask |= 1u << (d - 1);
    }
    return mask;
}

std::string WheelProduct::to_string() const {
    std::string out;
    for (const auto& w : factors_) out += w.to_string();
    return out;
}

bool is_basis_form(const WheelProduct& p) {
    const auto& f = p.factors();
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (!f[k].is_canonical()) return false;
        if (k == 0) continue;
        const bool outranks = rank_compare(f[k - 1], f[k]) > 0;
        if (!outranks && f[k - 1].size() + f[k].size() <= p.ambient().w) return false;
    }
    return true;
}

H1BasisClass H1BasisClass::make(int a, int b, std::uint32_t left, const ComplexParams& ambient) {
    ambient.validate();
    if (ambient.w < 2) throw InvalidParams("no 2-wheels when w < 2");
    if (a == b || a < 1 || b < 1 || a > ambient.n || b > ambient.n) {
        throw InvalidParams("basis class needs two distinct labels within 1..n");
    }
    H1BasisClass c;
    c.i = std::max(a, b);
    c.j = std::min(a, b);
    const std::uint32_t pair = (1u << (c.i - 1)) | (1u << (c.j - 1));
    const std::uint32_t all = ambient.n >= 32 ? ~0u : (1u << ambient.n) - 1;
    if ((left & pair) != 0 || (left & ~all) != 0) {
        throw InvalidParams("left disks must avoid the 2-wheel and lie within 1..n");
    }
    c.left = ambient.w >= 3 ? 0 : left;
    return c;
}

int H1BasisClass::left_count() const noexcept {
    return std::popcount(left);
}

std::vector<int> H1BasisClass::left_labels() const {
    std::vector<int> out;
    for (int label = 32; label >= 1; --label) {
        if (left & (1u << (label - 1))) out.push_back(label);
    }
    return out;
}

namespace {

struct Arrangement {
    std::vector<int> lhs;  // decreasing
    std::vector<int> rhs;  // decreasing
};

Arrangement arrange(const H1BasisClass& c, int n) {
    Arrangement a;
    for (int label = n; label >= 1; --label) {
        if (label == c.i || label == c.j) continue;
        (c.left & (1u << (label - 1)) ? a.lhs : a.rhs).push_back(label);
    }
    return a;
}

}  // namespace

std::string H1BasisClass::to_string(const ComplexParams& ambient) const {
    const auto a = arrange(*this, ambient.n);
    std::string out;
    for (int x : a.lhs) out += "W(" + std::to_string(x) + ")";
    out += "W(" + std::to_string(i) + "," + std::to_string(j) + ")";
    for (int x : a.rhs) out += "W(" + std::to_string(x) + ")";
    return out;
}

void H1Vector::add(const H1BasisClass& c, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(c, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<H1Vector> wheel_h1_image(const WheelProduct& context, std::size_t factor) {
    const auto& factors = context.factors();
    if (factor >= factors.size()) throw InvalidParams("factor index out of range");
    const Wheel& wheel = factors[factor];
    if (wheel.size() < 2) throw WheelTooSmall(wheel.to_string() + " has no first homology");

    std::uint32_t left = 0;
    for (std::size_t k = 0; k < factor; ++k) {
        for (int d : factors[k].disks()) left |= 1u << (d - 1);
    }
    const auto& disks = wheel.disks();
    std::vector<H1Vector> out;
    for (std::size_t t = 1; t < disks.size(); ++t) {
        H1Vector v(context.ambient());
        for (std::size_t s = 0; s < t; ++s) {
            v.add(H1BasisClass::make(disks[s], disks[t], left, context.ambient()), Rational(1));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<H1Vector> wheel_h1_image(const Wheel& wheel, const WheelProduct& context) {
    const auto& factors = context.factors();
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k] == wheel) return wheel_h1_image(context, k);
    }
    throw InvalidParams(wheel.to_string() + " is not a factor of " + context.to_string());
}

std::vector<H1Vector> product_h1_image(const WheelProduct& p) {
    std::vector<H1Vector> out;
    for (std::size_t k = 0; k < p.factors().size(); ++k) {
        if (p.factors()[k].size() < 2) continue;
        auto part = wheel_h1_image(p, k);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

std::size_t h1_rank(std::span<const H1Vector> vectors) {
    if (vectors.empty()) return 0;
    const auto ambient = vectors.front().ambient();
    std::map<H1BasisClass, std::size_t> column;
    for (const auto& v : vectors) {
        if (!(v.ambient() == ambient)) throw DimensionMismatch("H1 vectors from different conf(n,w)");
        for (const auto& [c, q] : v.terms()) column.try_emplace(c, column.size());
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vectors) {
        std::vector<Rational> row(column.size());
        for (const auto& [c, q] : v.terms()) row[column.at(c)] = q;
        rows.push_back(std::move(row));
    }
    return rational_rank(std::move(rows));
}

bool spans_disjoint(std::span<const H1Vector> a, std::span<const H1Vector> b) {
    std::vector<H1Vector> both(a.begin(), a.end());
    both.insert(both.end(), b.begin(), b.end());
    return h1_rank(both) == h1_rank(a) + h1_rank(b);
}

std::vector<Symbol> class_to_cycle_cells(const H1BasisClass& c, const ComplexParams& ambient) {
    const auto checked = H1BasisClass::make(c.i, c.j, c.left, ambient);
    const auto a = arrange(checked, ambient.n);
    std::vector<Symbol> out;
    for (const auto& pair : {std::vector<int>{checked.i, checked.j}, std::vector<int>{checked.j, checked.i}}) {
        std::vector<std::vector<int>> blocks;
        for (int x : a.lhs) blocks.push_back({x});
        blocks.push_back(pair);
        for (int x : a.rhs) blocks.push_back({x});
        out.push_back(Symbol::from_blocks(blocks));
    }
    return out;
}

ChainVector class_to_cycle(const H1BasisClass& c, const ChainComplexF2& complex) {
    const auto cells = class_to_cycle_cells(c, complex.params());
    return complex.chain_of(cells);
}

ChainVector vector_to_cycle(const H1Vector& v, const ChainComplexF2& complex) {
    if (!(v.ambient() == complex.params())) throw DimensionMismatch("vector and complex differ in (n,w)");
    std::vector<Symbol> cells;
    for (const auto& [c, q] : v.terms()) {
        if (denominator(q) != 1) throw InvalidParams("mod-2 reduction needs integer coefficients");
        if (numerator(q) % 2 == 0) continue;
        auto pair = class_to_cycle_cells(c, complex.params());
        cells.insert(cells.end(), pair.begin(), pair.end());
    }
    if (cells.empty()) return ChainVector{1, {}};
    return complex.chain_of(cells);
}

}  // namespace conftc
