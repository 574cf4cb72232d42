#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "conftc/chains.hpp"
#include "conftc/errors.hpp"
#include "conftc/wheels.hpp"

using namespace conftc;

namespace {

H1BasisClass cls(int i, int j, std::initializer_list<int> left, const ComplexParams& p) {
    std::uint32_t mask = 0;
    for (int x : left) mask |= 1u << (x - 1);
    return H1BasisClass::make(i, j, mask, p);
}

H1Vector vec(const ComplexParams& p, std::initializer_list<H1BasisClass> terms) {
    H1Vector v(p);
    for (const auto& c : terms) v.add(c, 1);
    return v;
}

}  // namespace

TEST_SUITE("wheels") {

TEST_CASE("wheel basics") {
    const Wheel w({3, 1, 2});
    CHECK(w.size() == 3);
    CHECK(w.max_label() == 3);
    CHECK(w.is_canonical());
    CHECK(w.torus_dimension() == 2);
    CHECK(w.to_string() == "W(3,1,2)");
    CHECK_FALSE(Wheel({1, 3, 2}).is_canonical());
    CHECK_THROWS_AS(Wheel({}), InvalidParams);
    CHECK_THROWS_AS(Wheel({2, 2}), InvalidParams);
    CHECK_THROWS_AS(Wheel({0, 1}), InvalidParams);
}

TEST_CASE("rank comparison") {
    CHECK(rank_compare(Wheel({3, 1}), Wheel({2})) > 0);
    CHECK(rank_compare(Wheel({3, 1}), Wheel({2, 1})) > 0);
    CHECK(rank_compare(Wheel({5}), Wheel({5})) == 0);
    CHECK(rank_compare(Wheel({2}), Wheel({3})) < 0);
}

TEST_CASE("products validate and parse") {
    const ComplexParams p{7, 3};
    const auto a = WheelProduct::parse("W(7,4,3)W(6,2,1)W(5)", p);
    CHECK(a.factors().size() == 3);
    CHECK(a.torus_dimension() == 4);
    CHECK(a.to_string() == "W(7,4,3)W(6,2,1)W(5)");
    CHECK(a.disk_mask() == 0b1111111u);
    CHECK(WheelProduct::parse(" W( 3 , 1 ) W(2)", {3, 2}).to_string() == "W(3,1)W(2)");
    CHECK_THROWS_AS(WheelProduct::parse("W(7,4,3)W(4)", p), InvalidParams);
    CHECK_THROWS_AS(WheelProduct::parse("W(8)", p), InvalidParams);
    CHECK_THROWS_AS(WheelProduct::parse("W(4,3,2,1)", p), InvalidParams);
    CHECK_THROWS_AS(WheelProduct::parse("W(1,2", p), InvalidParams);
    CHECK_THROWS_AS(WheelProduct::parse("V(1)", p), InvalidParams);
    CHECK(WheelProduct::parse("", p).torus_dimension() == 0);
}

TEST_CASE("basis form") {
    CHECK(is_basis_form(WheelProduct::parse("W(3,1)W(2)", {3, 2})));
    CHECK_FALSE(is_basis_form(WheelProduct::parse("W(2)W(3)", {3, 2})));
    CHECK_FALSE(is_basis_form(WheelProduct::parse("W(1,3,2)", {3, 3})));
    CHECK(is_basis_form(WheelProduct::parse("W(3)W(2)W(1)", {3, 2})));
    CHECK_FALSE(is_basis_form(WheelProduct::parse("W(3)W(2,1)", {3, 3})));
    CHECK(is_basis_form(WheelProduct::parse("W(3)W(2,1)", {3, 2})));
}

TEST_CASE("basis classes canonicalize") {
    const ComplexParams two{4, 2}, three{4, 3};
    const auto c = cls(1, 3, {4}, two);
    CHECK(c.i == 3);
    CHECK(c.j == 1);
    CHECK(c.left_count() == 1);
    CHECK(c.left_labels() == std::vector<int>{4});
    CHECK(c.to_string(two) == "W(4)W(3,1)W(2)");
    CHECK(cls(3, 1, {4}, three).left == 0u);
    CHECK(cls(3, 1, {4}, three).to_string(three) == "W(3,1)W(4)W(2)");
    CHECK_THROWS_AS(cls(3, 3, {}, two), InvalidParams);
    CHECK_THROWS_AS(cls(3, 1, {3}, two), InvalidParams);
    CHECK_THROWS_AS(cls(5, 1, {}, two), InvalidParams);
    CHECK_THROWS_AS(H1BasisClass::make(2, 1, 0, {2, 1}), InvalidParams);
}

TEST_CASE("images of wheels") {
    const ComplexParams p3{3, 3};
    const auto standalone = WheelProduct::parse("W(1,3,2)", p3);
    const auto img = wheel_h1_image(standalone, 0);
    REQUIRE(img.size() == 2);
    CHECK(img[0] == vec(p3, {cls(3, 1, {}, p3)}));
    CHECK(img[1] == vec(p3, {cls(2, 1, {}, p3), cls(3, 2, {}, p3)}));
    CHECK(wheel_h1_image(Wheel({1, 3, 2}), standalone) == img);

    const ComplexParams p32{3, 2};
    CHECK(product_h1_image(WheelProduct::parse("W(3,1)W(2)", p32)) ==
          std::vector{vec(p32, {cls(3, 1, {}, p32)})});
    CHECK(product_h1_image(WheelProduct::parse("W(2,1)W(3)", p32)) ==
          std::vector{vec(p32, {cls(2, 1, {}, p32)})});

    const ComplexParams p42{4, 2};
    CHECK(product_h1_image(WheelProduct::parse("W(4,2)W(3,1)", p42)) ==
          std::vector{vec(p42, {cls(4, 2, {}, p42)}), vec(p42, {cls(3, 1, {4, 2}, p42)})});

    const ComplexParams p73{7, 3};
    CHECK(product_h1_image(WheelProduct::parse("W(7,4,3)W(6,2,1)W(5)", p73)) ==
          std::vector{vec(p73, {cls(7, 4, {}, p73)}), vec(p73, {cls(7, 3, {}, p73), cls(4, 3, {}, p73)}),
                      vec(p73, {cls(6, 2, {}, p73)}), vec(p73, {cls(6, 1, {}, p73), cls(2, 1, {}, p73)})});

    CHECK(product_h1_image(WheelProduct::parse("W(5)", {5, 2})).empty());
    CHECK_THROWS_AS(wheel_h1_image(WheelProduct::parse("W(5)", {5, 2}), 0), WheelTooSmall);
    CHECK_THROWS_AS(wheel_h1_image(Wheel({4}), WheelProduct::parse("W(5)", {5, 2})), InvalidParams);
}

TEST_CASE("image coefficients are 0 or 1 and have full rank for canonical wheels") {
    const ComplexParams p{6, 6};
    const auto prod = WheelProduct::parse("W(6,5,4,3,2,1)", p);
    const auto img = product_h1_image(prod);
    CHECK(img.size() == 5);
    CHECK(h1_rank(img) == 5);
    for (const auto& v : img) {
        for (const auto& [c, q] : v.terms()) CHECK(q == 1);
    }
}

TEST_CASE("ranks and disjointness") {
    const ComplexParams p{3, 2};
    const auto a = product_h1_image(WheelProduct::parse("W(3,1)W(2)", p));
    const auto b = product_h1_image(WheelProduct::parse("W(2,1)W(3)", p));
    CHECK(spans_disjoint(a, b));
    CHECK_FALSE(spans_disjoint(a, a));
    CHECK(h1_rank(std::vector<H1Vector>{}) == 0);

    H1Vector twice(p);
    twice.add(cls(3, 1, {}, p), 2);
    CHECK(h1_rank(std::vector{a[0], twice}) == 1);
    H1Vector cancel(p);
    cancel.add(cls(3, 1, {}, p), 1);
    cancel.add(cls(3, 1, {}, p), -1);
    CHECK(cancel.is_zero());

    const auto other = product_h1_image(WheelProduct::parse("W(3,1)W(2)", {3, 3}));
    CHECK_THROWS_AS(h1_rank(std::vector{a[0], other[0]}), DimensionMismatch);

    const ComplexParams p73{7, 3};
    CHECK(spans_disjoint(product_h1_image(WheelProduct::parse("W(7,4,3)W(6,2,1)W(5)", p73)),
                         product_h1_image(WheelProduct::parse("W(6,4,3)W(5,2,1)W(7)", p73))));
}

TEST_CASE("class_to_cycle examples") {
    const ComplexParams p{3, 2};
    const auto c = ChainComplexF2::build(p);
    auto names = [&](const H1BasisClass& k) {
        std::vector<std::string> out;
        for (const auto& s : class_to_cycle_cells(k, p)) out.push_back(s.to_string());
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(names(cls(2, 1, {}, p)) == std::vector<std::string>{"1 2|3", "2 1|3"});
    CHECK(names(cls(3, 1, {}, p)) == std::vector<std::string>{"1 3|2", "3 1|2"});
    CHECK(names(cls(3, 2, {1}, p)) == std::vector<std::string>{"1|2 3", "1|3 2"});
    CHECK(c.boundary_of(class_to_cycle(cls(3, 2, {1}, p), c)).support.empty());
}

TEST_CASE("every basis class maps to a cycle, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (int w = 2; w <= n; ++w) {
            const ComplexParams p{n, w};
            const auto c = ChainComplexF2::build(p);
            const std::uint32_t full = (1u << n) - 1;
            for (int i = 2; i <= n; ++i) {
                for (int j = 1; j < i; ++j) {
                    const std::uint32_t rest = full & ~((1u << (i - 1)) | (1u << (j - 1)));
                    // every subset of the remaining disks as the left side
                    for (std::uint32_t left = rest;; left = (left - 1) & rest) {
                        const auto k = H1BasisClass::make(i, j, left, p);
                        const auto z = class_to_cycle(k, c);
                        CHECK(z.support.size() == 2);
                        CHECK(c.boundary_of(z).support.empty());
                        if (left == 0 || w >= 3) break;
                    }
                }
            }
        }
    }
}

TEST_CASE("a basis product with a single 2-wheel maps to its own class") {
    for (int w = 2; w <= 3; ++w) {
        const ComplexParams p{5, w};
        for (int i = 2; i <= 5; ++i) {
            for (int j = 1; j < i; ++j) {
                std::vector<int> rest;
                for (int x = 5; x >= 1; --x) {
                    if (x != i && x != j) rest.push_back(x);
                }
                for (int split = 0; split <= 3; ++split) {
                    std::vector<Wheel> factors;
                    for (int k = 0; k < split; ++k) factors.emplace_back(std::vector<int>{rest[static_cast<std::size_t>(k)]});
                    factors.emplace_back(std::vector<int>{i, j});
                    for (int k = split; k < 3; ++k) factors.emplace_back(std::vector<int>{rest[static_cast<std::size_t>(k)]});
                    const WheelProduct prod(factors, p);
                    if (!is_basis_form(prod)) continue;
                    std::uint32_t left = 0;
                    for (int k = 0; k < split; ++k) left |= 1u << (rest[static_cast<std::size_t>(k)] - 1);
                    const auto k = H1BasisClass::make(i, j, left, p);
                    CHECK(product_h1_image(prod) == std::vector{vec(p, {k})});
                    CHECK(k.to_string(p) == prod.to_string());
                }
            }
        }
    }
}

TEST_CASE("symbolic classes are independent at chain level for w = 2, n <= 5") {
    // all wheel classes with distinct (pair, left set) are independent mod 2
    for (int n = 3; n <= 5; ++n) {
        const ComplexParams p{n, 2};
        const auto c = ChainComplexF2::build(p);
        std::vector<ChainVector> cycles;
        const std::uint32_t full = (1u << n) - 1;
        for (int i = 2; i <= n; ++i) {
            for (int j = 1; j < i; ++j) {
                const std::uint32_t rest = full & ~((1u << (i - 1)) | (1u << (j - 1)));
                for (std::uint32_t left = rest;; left = (left - 1) & rest) {
                    cycles.push_back(class_to_cycle(H1BasisClass::make(i, j, left, p), c));
                    if (left == 0) break;
                }
            }
        }
        CAPTURE(n);
        CHECK(cycles.size() <= betti(c)[1]);
        CHECK(classes_independent(cycles, c));
    }
}

TEST_CASE("vector_to_cycle reduces integer coefficients mod 2") {
    const ComplexParams p{3, 2};
    const auto c = ChainComplexF2::build(p);
    H1Vector v(p);
    v.add(cls(3, 1, {}, p), 3);
    v.add(cls(2, 1, {}, p), 2);
    CHECK(vector_to_cycle(v, c) == class_to_cycle(cls(3, 1, {}, p), c));
    H1Vector half(p);
    half.add(cls(3, 1, {}, p), Rational(1, 2));
    CHECK_THROWS_AS(vector_to_cycle(half, c), InvalidParams);
    CHECK(vector_to_cycle(H1Vector(p), c).support.empty());
    CHECK_THROWS_AS(vector_to_cycle(H1Vector({3, 3}), c), DimensionMismatch);
}

}
