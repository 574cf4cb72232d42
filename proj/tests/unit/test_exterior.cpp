#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <tuple>

#include "doctest.h"

#include "conftc/errors.hpp"
#include "conftc/exterior.hpp"

using namespace conftc;

namespace {

// Top coefficient of a product of linear forms is the determinant of their
// coefficient matrix; computed here by cofactor-free elimination.
long long determinant(std::vector<std::vector<long long>> a) {
    const std::size_t n = a.size();
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

long long oracle(const TorusLayout& t) {
    const auto factors = witness_factors(t.m, t.l, t.r);
    const auto n = static_cast<std::size_t>(t.total_degree());
    std::vector<std::vector<long long>> a(factors.size(), std::vector<long long>(n, 0));
    for (std::size_t f = 0; f < factors.size(); ++f) {
        const auto& z = factors[f];
        for (auto [pos, s] : {std::pair{z.i, 1}, std::pair{z.j, -1}}) {
            const bool g = pos == t.g_factor;
            if ((z.cls.kind == AmbientClass::z) != g) continue;
            a[f][static_cast<std::size_t>(t.generator(pos, z.cls.index))] += s;
        }
    }
    return determinant(a);
}

ExtElement random_element(std::mt19937& rng, int gens) {
    ExtElement e;
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<Monomial> mono(0, (Monomial{1} << gens) - 1);
    for (int k = 0; k < 4; ++k) e.add(mono(rng), coeff(rng));
    return e;
}

int degree(Monomial m) { return std::popcount(m); }

}  // namespace

TEST_SUITE("exterior") {

TEST_CASE("wedge signs") {
    CHECK(wedge_sign(0b1, 0b10) == 1);
    CHECK(wedge_sign(0b10, 0b1) == -1);
    CHECK(wedge_sign(0b11, 0b1) == 0);
    CHECK(wedge_sign(0b110, 0b1) == 1);
    CHECK(wedge_sign(0b100, 0b11) == 1);
    CHECK(wedge_sign(0b010, 0b101) == -1);
    CHECK(wedge_sign(Monomial{1} << 63, 1) == -1);
}

TEST_CASE("algebra laws on random elements") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_element(rng, 8), b = random_element(rng, 8), c = random_element(rng, 8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * ExtElement::one() == a);
    }
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<Monomial> mono(0, 255);
        const Monomial x = mono(rng), y = mono(rng);
        if (x & y) continue;
        const int graded = (degree(x) * degree(y)) % 2 ? -1 : 1;
        CHECK(wedge_sign(x, y) == graded * wedge_sign(y, x));
    }
    const auto g = ExtElement::generator(3);
    CHECK((g * g).is_zero());
    CHECK_THROWS_AS(ExtElement::generator(64), InvalidParams);
}

TEST_CASE("layouts") {
    const auto t = TorusLayout::standard(3, 2, 3);
    CHECK(t.total_degree() == 8);
    CHECK(t.generator(1, 1) == 0);
    CHECK(t.generator(2, 1) == 2);
    CHECK(t.generator(3, 3) == 7);
    CHECK(t.describe(0b101) == "x(1,1) x(2,1)");
    CHECK_THROWS_AS(t.generator(1, 3), InvalidParams);
    CHECK_THROWS_AS(TorusLayout::standard(2, 3, 2), InvalidParams);
    CHECK_THROWS_AS(TorusLayout::standard(2, 1, 1), InvalidParams);
    TorusLayout bad{2, 1, 3, 1, {1, 1, 2}};
    CHECK_THROWS_AS(bad.validate(), InvalidParams);
}

TEST_CASE("zeta pullbacks") {
    const auto t = TorusLayout::standard(2, 1, 3);
    // y lives on the f-tori (positions 2, 3), z on the g-torus (position 1)
    CHECK(zeta_pullback({AmbientClass::y, 1}, 1, 2, t) == ExtElement::generator(t.generator(2, 1)).scaled(-1));
    CHECK(zeta_pullback({AmbientClass::z, 1}, 1, 2, t) == ExtElement::generator(t.generator(1, 1)));
    CHECK(zeta_pullback({AmbientClass::y, 2}, 2, 3, t) ==
          ExtElement::generator(t.generator(2, 2)) - ExtElement::generator(t.generator(3, 2)));
    CHECK(zeta_pullback({AmbientClass::z, 1}, 2, 3, t).is_zero());
    CHECK_THROWS_AS(zeta_pullback({AmbientClass::z, 2}, 1, 2, t), InvalidParams);
    CHECK_THROWS_AS(zeta_pullback({AmbientClass::y, 1}, 2, 2, t), InvalidParams);
}

TEST_CASE("witness factors") {
    for (int m = 1; m <= 4; ++m) {
        for (int l = 0; l <= m; ++l) {
            for (int r = 2; r <= 5; ++r) CHECK(witness_factors(m, l, r).size() == static_cast<std::size_t>(m * (r - 1) + l));
        }
    }
    const auto f = witness_factors(2, 1, 3);
    CHECK(f.front().cls.kind == AmbientClass::z);
    CHECK(f.back().i == 2);
    CHECK(f.back().j == 3);
}

TEST_CASE("witness is a unit with one surviving term") {
    for (int m = 1; m <= 4; ++m) {
        for (int l = 0; l <= m; ++l) {
            for (int r = 2; r <= 4; ++r) {
                CAPTURE(m);
                CAPTURE(l);
                CAPTURE(r);
                const auto t = TorusLayout::standard(m, l, r);
                const Rational v = evaluate_witness(t);
                CHECK((v == 1 || v == -1));
                CHECK(v == oracle(t));
                CHECK(evaluate_witness_ambient(t) == v);
                const auto terms = surviving_terms(t);
                REQUIRE(terms.size() == 1);
                CHECK(terms[0].value == v);
            }
        }
    }
    const auto s = surviving_terms(1, 1, 2);
    REQUIRE(s.size() == 1);
    CHECK(s[0].ambient == "z1@1 y1@2");
}

TEST_CASE("block order changes only the sign") {
    for (auto [m, l, r] : {std::tuple{2, 1, 3}, std::tuple{3, 2, 3}, std::tuple{2, 2, 4}}) {
        TorusLayout t = TorusLayout::standard(m, l, r);
        const Rational base = evaluate_witness(t);
        std::vector<int> order(static_cast<std::size_t>(r));
        std::iota(order.begin(), order.end(), 1);
        do {
            t.order = order;
            const Rational v = evaluate_witness(t);
            CHECK((v == base || v == -base));
            CHECK(v == oracle(t));
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("the g-torus away from the first position kills the witness") {
    for (int r = 3; r <= 4; ++r) {
        TorusLayout t = TorusLayout::standard(2, 1, r);
        t.g_factor = r;
        CHECK(evaluate_witness(t) == 0);
        CHECK(oracle(t) == 0);
        CHECK(surviving_terms(t).empty());
    }
}

TEST_CASE("degree guard") {
    CHECK_THROWS_AS(TorusLayout::standard(5, 5, 16), InvalidParams);
    CHECK_THROWS_AS(surviving_terms(4, 4, 9), InvalidParams);  // 72 ambient generators
}

}
