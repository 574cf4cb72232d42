#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conftc/chains.hpp"
#include "conftc/rational.hpp"
#include "conftc/symbols.hpp"

namespace conftc {

/// W(i1,...,ik): disk i2 orbits i1, i3 orbits both, and so on; a (k-1)-torus.
class Wheel {
public:
    explicit Wheel(std::vector<int> disks);

    const std::vector<int>& disks() const noexcept { return disks_; }
    int size() const noexcept { return static_cast<int>(disks_.size()); }
    int max_label() const;
    /// Largest label first.
    bool is_canonical() const;
    int torus_dimension() const noexcept { return size() - 1; }
    std::string to_string() const;

    friend bool operator==(const Wheel&, const Wheel&) = default;

private:
    std::vector<int> disks_;
};

/// More disks ranks higher; equal sizes compare by largest label.
std::weak_ordering rank_compare(const Wheel& a, const Wheel& b);

/// Wheels placed left to right in the strip; disk sets pairwise disjoint.
class WheelProduct {
public:
    WheelProduct(std::vector<Wheel> factors, ComplexParams ambient);

    /// Parses "W(7,4,3)W(6,2,1)W(5)".
    static WheelProduct parse(std::string_view text, ComplexParams ambient);

    const std::vector<Wheel>& factors() const noexcept { return factors_; }
    const ComplexParams& ambient() const noexcept { return ambient_; }
    int torus_dimension() const;
    /// Bit (label-1) set for each disk used by the product.
    std::uint32_t disk_mask() const;
    std::string to_string() const;

    friend bool operator==(const WheelProduct&, const WheelProduct&) = default;

private:
    std::vector<Wheel> factors_;
    ComplexParams ambient_;
};

/// Every wheel is largest-first and each adjacent pair W1 W2 has W1
/// outranking W2 or more than w disks between them.
bool is_basis_form(const WheelProduct& p);

/// A degree-one basis class: the 2-wheel W(i,j), i > j, with the remaining
/// disks as 1-wheels. For w = 2 the labels left of the 2-wheel matter (a
/// 2-wheel cannot pass a single disk); for w >= 3 they commute to the right
/// and `left` is empty. Singletons on each side sit in decreasing order.
struct H1BasisClass {
    int i = 2;
    int j = 1;
    std::uint32_t left = 0;  // bit (label-1) set for each disk left of the 2-wheel

    /// Canonical class for the pair {a, b} with the given left disks.
    static H1BasisClass make(int a, int b, std::uint32_t left, const ComplexParams& ambient);

    int left_count() const noexcept;
    std::vector<int> left_labels() const;
    /// The basis product, e.g. "W(4)W(2)W(3,1)" in conf(4,2).
    std::string to_string(const ComplexParams& ambient) const;

    friend bool operator==(const H1BasisClass&, const H1BasisClass&) = default;
    friend auto operator<=>(const H1BasisClass&, const H1BasisClass&) = default;
};

/// Rational combination of degree-one basis classes of one ambient conf(n, w).
class H1Vector {
public:
    explicit H1Vector(ComplexParams ambient) : ambient_(ambient) {}

    void add(const H1BasisClass& c, const Rational& coeff);
    const std::map<H1BasisClass, Rational>& terms() const noexcept { return terms_; }
    const ComplexParams& ambient() const noexcept { return ambient_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    friend bool operator==(const H1Vector&, const H1Vector&) = default;

private:
    ComplexParams ambient_;
    std::map<H1BasisClass, Rational> terms_;
};

/// Image in H1 of the factor at `factor` of `context`: k-1 vectors, the t-th
/// (t = 2..k) being the sum over s < t of the class of pair (i_s, i_t).
/// Throws WheelTooSmall for a 1-wheel.
std::vector<H1Vector> wheel_h1_image(const WheelProduct& context, std::size_t factor);
std::vector<H1Vector> wheel_h1_image(const Wheel& wheel, const WheelProduct& context);

/// Concatenation of the factor images; one vector per torus dimension.
std::vector<H1Vector> product_h1_image(const WheelProduct& p);

/// Rank over the rationals. Throws DimensionMismatch on mixed ambients.
std::size_t h1_rank(std::span<const H1Vector> vectors);

/// True iff the spans of `a` and `b` meet only in zero.
bool spans_disjoint(std::span<const H1Vector> a, std::span<const H1Vector> b);

/// The two 1-cells carrying the loop of disks i and j orbiting each other
/// with the other disks as singletons around them.
std::vector<Symbol> class_to_cycle_cells(const H1BasisClass& c, const ComplexParams& ambient);
ChainVector class_to_cycle(const H1BasisClass& c, const ChainComplexF2& complex);

/// Mod-2 reduction of a vector with integer coefficients as a 1-chain.
ChainVector vector_to_cycle(const H1Vector& v, const ChainComplexF2& complex);

}  // namespace conftc
