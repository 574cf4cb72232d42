#include "conftc/exterior.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include "conftc/errors.hpp"

namespace conftc {

int wedge_sign(Monomial a, Monomial b) {
    if (a & b) return 0;
    int swaps = 0;
    for (Monomial rest = b; rest; rest &= rest - 1) {
        const int k = std::countr_zero(rest);
        // generators of a above k must move past it
        swaps += std::popcount(k == 63 ? Monomial{0} : a >> (k + 1));
    }
    return swaps % 2 ? -1 : 1;
}

ExtElement ExtElement::one() {
    ExtElement e;
    e.terms_.emplace(Monomial{0}, Rational(1));
    return e;
}

ExtElement ExtElement::generator(int index) {
    if (index < 0 || index >= 64) throw InvalidParams("generator index must be in 0..63");
    ExtElement e;
    e.terms_.emplace(Monomial{1} << index, Rational(1));
    return e;
}

void ExtElement::add(Monomial mono, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational ExtElement::coefficient(Monomial mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
    ExtElement out = *this;
    for (const auto& [mono, q] : o.terms_) out.add(mono, q);
    return out;
}

ExtElement ExtElement::operator-(const ExtElement& o) const {
    ExtElement out = *this;
    for (const auto& [mono, q] : o.terms_) out.add(mono, -q);
    return out;
}

ExtElement ExtElement::operator*(const ExtElement& o) const {
    ExtElement out;
    for (const auto& [a, p] : terms_) {
        for (const auto& [b, q] : o.terms_) {
            const int s = wedge_sign(a, b);
            if (s == 0) continue;
            Rational c = p * q;
            out.add(a | b, s > 0 ? c : -c);
        }
    }
    return out;
}

ExtElement ExtElement::scaled(const Rational& q) const {
    ExtElement out;
    if (q == 0) return out;
    for (const auto& [mono, p] : terms_) out.terms_.emplace(mono, p * q);
    return out;
}

TorusLayout TorusLayout::standard(int m, int l, int r) {
    TorusLayout t{m, l, r, 1, {}};
    t.validate();
    return t;
}

void TorusLayout::validate() const {
    if (m < 1 || l < 0 || l > m) throw InvalidParams("torus layout needs m >= l >= 0 and m >= 1");
    if (r < 2) throw InvalidParams("torus layout needs r >= 2");
    if (g_factor < 1 || g_factor > r) throw InvalidParams("g_factor must lie in 1..r");
    if (!order.empty()) {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect(static_cast<std::size_t>(r));
        std::iota(expect.begin(), expect.end(), 1);
        if (sorted != expect) throw InvalidParams("factor order must be a permutation of 1..r");
    }
    if (total_degree() > 64) throw InvalidParams("more than 64 generators");
}

int TorusLayout::slots(int position) const {
    return position == g_factor ? l : m;
}

int TorusLayout::generator(int position, int slot) const {
    if (position < 1 || position > r || slot < 1 || slot > slots(position)) {
        throw InvalidParams("no generator (" + std::to_string(position) + "," + std::to_string(slot) + ")");
    }
    int offset = 0;
    for (int k = 0; k < r; ++k) {
        const int pos = order.empty() ? k + 1 : order[static_cast<std::size_t>(k)];
        if (pos == position) return offset + slot - 1;
        offset += slots(pos);
    }
    throw InvalidParams("position missing from factor order");
}

int TorusLayout::total_degree() const {
    return (r - 1) * m + l;
}

Monomial TorusLayout::top() const {
    const int d = total_degree();
    return d == 64 ? ~Monomial{0} : (Monomial{1} << d) - 1;
}

std::string TorusLayout::describe(Monomial mono) const {
    std::string out;
    for (int pos = 1; pos <= r; ++pos) {
        for (int s = 1; s <= slots(pos); ++s) {
            if (!(mono >> generator(pos, s) & 1u)) continue;
            if (!out.empty()) out += ' ';
            out += "x(" + std::to_string(pos) + "," + std::to_string(s) + ")";
        }
    }
    return out.empty() ? "1" : out;
}

std::string AmbientClass::to_string() const {
    return (kind == y ? "y" : "z") + std::to_string(index);
}

namespace {

// Pullback of a at tensor position k: a generator or nothing.
std::optional<int> pulled(const AmbientClass& a, int k, const TorusLayout& layout) {
    const bool on_g = k == layout.g_factor;
    if ((a.kind == AmbientClass::y) == on_g) return std::nullopt;
    return layout.generator(k, a.index);
}

void check_class(const AmbientClass& a, const TorusLayout& layout) {
    const int bound = a.kind == AmbientClass::y ? layout.m : layout.l;
    if (a.index < 1 || a.index > bound) {
        throw InvalidParams("class " + a.to_string() + " out of range");
    }
}

// Ambient generators: per position k, y_1..y_m then z_1..z_l.
struct AmbientLayout {
    int m, l, r;
    int index(const AmbientClass& a, int k) const {
        return (k - 1) * (m + l) + (a.kind == AmbientClass::y ? a.index - 1 : m + a.index - 1);
    }
    std::pair<AmbientClass, int> decode(int g) const {
        const int k = g / (m + l) + 1;
        const int s = g % (m + l);
        if (s < m) return {{AmbientClass::y, s + 1}, k};
        return {{AmbientClass::z, s - m + 1}, k};
    }
};

ExtElement expand_ambient(const TorusLayout& layout, const AmbientLayout& amb) {
    ExtElement product = ExtElement::one();
    for (const auto& f : witness_factors(layout.m, layout.l, layout.r)) {
        product = product * (ExtElement::generator(amb.index(f.cls, f.i)) - ExtElement::generator(amb.index(f.cls, f.j)));
    }
    return product;
}

// Coefficient of the top class in the pullback of an ambient monomial.
Rational pull_monomial(Monomial mono, const TorusLayout& layout, const AmbientLayout& amb) {
    ExtElement e = ExtElement::one();
    for (Monomial rest = mono; rest; rest &= rest - 1) {
        const auto [cls, k] = amb.decode(std::countr_zero(rest));
        const auto g = pulled(cls, k, layout);
        if (!g) return 0;
        e = e * ExtElement::generator(*g);
    }
    return e.coefficient(layout.top());
}

AmbientLayout ambient_for(const TorusLayout& layout) {
    layout.validate();
    if (layout.r * (layout.m + layout.l) > 64) throw InvalidParams("ambient algebra exceeds 64 generators");
    return AmbientLayout{layout.m, layout.l, layout.r};
}

}  // namespace

ExtElement zeta_pullback(const AmbientClass& a, int i, int j, const TorusLayout& layout) {
    layout.validate();
    if (i < 1 || j > layout.r || i >= j) throw InvalidParams("zeta needs 1 <= i < j <= r");
    check_class(a, layout);
    ExtElement out;
    if (auto g = pulled(a, i, layout)) out.add(Monomial{1} << *g, 1);
    if (auto g = pulled(a, j, layout)) out.add(Monomial{1} << *g, -1);
    return out;
}

std::vector<ZetaFactor> witness_factors(int m, int l, int r) {
    std::vector<ZetaFactor> out;
    for (int q = 1; q <= l; ++q) out.push_back({{AmbientClass::z, q}, 1, 2});
    for (int p = 1; p <= m; ++p) out.push_back({{AmbientClass::y, p}, 1, 2});
    for (int k = 3; k <= r; ++k) {
        for (int p = 1; p <= m; ++p) out.push_back({{AmbientClass::y, p}, k - 1, k});
    }
    return out;
}

Rational evaluate_witness(const TorusLayout& layout) {
    layout.validate();
    const auto factors = witness_factors(layout.m, layout.l, layout.r);
    if (static_cast<int>(factors.size()) != layout.total_degree()) {
        throw Error("witness has " + std::to_string(factors.size()) + " factors but the torus has dimension " +
                    std::to_string(layout.total_degree()));
    }
    ExtElement product = ExtElement::one();
    for (const auto& f : factors) {
        product = product * zeta_pullback(f.cls, f.i, f.j, layout);
        if (product.is_zero()) return 0;
    }
    return product.coefficient(layout.top());
}

Rational evaluate_witness(int m, int l, int r) {
    return evaluate_witness(TorusLayout::standard(m, l, r));
}

Rational evaluate_witness_ambient(const TorusLayout& layout) {
    const auto amb = ambient_for(layout);
    const auto expanded = expand_ambient(layout, amb);
    Rational total = 0;
    for (const auto& [mono, q] : expanded.terms()) total += q * pull_monomial(mono, layout, amb);
    return total;
}

std::vector<SurvivingTerm> surviving_terms(const TorusLayout& layout) {
    const auto amb = ambient_for(layout);
    const auto expanded = expand_ambient(layout, amb);
    std::vector<SurvivingTerm> out;
    for (const auto& [mono, q] : expanded.terms()) {
        const Rational v = pull_monomial(mono, layout, amb);
        if (v == 0) continue;
        std::string text;
        for (Monomial rest = mono; rest; rest &= rest - 1) {
            const auto [cls, k] = amb.decode(std::countr_zero(rest));
            if (!text.empty()) text += ' ';
            text += cls.to_string() + "@" + std::to_string(k);
        }
        out.push_back({std::move(text), q, q * v});
    }
    return out;
}

std::vector<SurvivingTerm> surviving_terms(int m, int l, int r) {
    return surviving_terms(TorusLayout::standard(m, l, r));
}

}  // namespace conftc
