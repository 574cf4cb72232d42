#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conftc/rational.hpp"

namespace conftc {

/// Bit k set for generator k. Generators are ordered by index; a monomial
/// stands for the wedge of its generators in increasing order.
using Monomial = std::uint64_t;

/// (-1)^(inversions) for the product a * b of two monomials, or 0 if they
/// share a generator.
int wedge_sign(Monomial a, Monomial b);

/// Element of an exterior algebra over the rationals on at most 64 generators.
class ExtElement {
public:
    ExtElement() = default;
    static ExtElement one();
    static ExtElement generator(int index);

    void add(Monomial mono, const Rational& coeff);
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(Monomial mono) const;

    ExtElement operator+(const ExtElement& o) const;
    ExtElement operator-(const ExtElement& o) const;
    ExtElement operator*(const ExtElement& o) const;
    ExtElement scaled(const Rational& q) const;

    friend bool operator==(const ExtElement&, const ExtElement&) = default;

private:
    std::map<Monomial, Rational> terms_;
};

/// Generator layout of H^*(T^l x T^m x ... x T^m) inside the r-fold product:
/// the g-torus (dimension l) sits at tensor position g_factor, f-tori
/// (dimension m) at the other positions. `order` lists tensor positions in
/// the order their generator blocks appear, which fixes the orientation of
/// the top class.
struct TorusLayout {
    int m = 1;
    int l = 1;
    int r = 2;
    int g_factor = 1;
    std::vector<int> order;  // empty means 1..r

    /// The standard layout: g at position 1, blocks in position order.
    static TorusLayout standard(int m, int l, int r);

    void validate() const;
    int slots(int position) const;
    int generator(int position, int slot) const;
    int total_degree() const;
    Monomial top() const;
    /// E.g. "x(1,1) x(2,1) x(2,2)".
    std::string describe(Monomial mono) const;
};

/// Degree-one classes of the target: y_p from the f-side, z_q from the g-side.
struct AmbientClass {
    enum Kind { y, z } kind = y;
    int index = 1;

    std::string to_string() const;
};

/// Pullback along the tori of zeta^{ij}(a) = (a at factor i) - (a at factor j):
/// y_p at an f-position becomes its slot generator, z_q at the g-position
/// likewise, and every other pairing becomes 0.
ExtElement zeta_pullback(const AmbientClass& a, int i, int j, const TorusLayout& layout);

/// One zero-divisor factor zeta^{ij}(a) of the witness product.
struct ZetaFactor {
    AmbientClass cls;
    int i = 1;
    int j = 2;
};

/// zeta^{12}(z_1..z_l) zeta^{12}(y_1..y_m) prod_{k=3..r} zeta^{(k-1)k}(y_1..y_m),
/// m(r-1)+l factors in all.
std::vector<ZetaFactor> witness_factors(int m, int l, int r);

/// Pulls back each factor, multiplies, and returns the coefficient of the
/// top monomial. Throws Error if the factor count differs from the top degree.
Rational evaluate_witness(const TorusLayout& layout);
Rational evaluate_witness(int m, int l, int r);

/// Same value, computed by expanding the product among ambient classes on
/// every factor first and pulling back afterwards.
Rational evaluate_witness_ambient(const TorusLayout& layout);

/// Ambient monomial of the expanded product that survives pullback.
struct SurvivingTerm {
    std::string ambient;  // e.g. "z1@1 y1@2"
    Rational ambient_coeff;
    Rational value;  // contribution to the top coefficient
};

/// Terms of the ambient expansion with nonzero pullback.
std::vector<SurvivingTerm> surviving_terms(const TorusLayout& layout);
std::vector<SurvivingTerm> surviving_terms(int m, int l, int r);

}  // namespace conftc
