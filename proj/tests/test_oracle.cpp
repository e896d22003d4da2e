#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "linkhom/alexander.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/oracle.hpp"

using namespace linkhom;

TEST_CASE("bp root multisets on pinned examples") {
    RootMultiset r23 = bp_root_multiset({2, 3});
    REQUIRE(r23.size() == 2);
    CHECK(r23.at(make_rat(1, 6)) == 1);
    CHECK(r23.at(make_rat(5, 6)) == 1);

    RootMultiset r222 = bp_root_multiset({2, 2, 2});
    REQUIRE(r222.size() == 1);
    CHECK(r222.at(make_rat(1, 2)) == 1);

    RootMultiset big = bp_root_multiset({12, 12, 12, 3, 2});
    Int total = 0;
    for (const auto& [th, mu] : big) total += mu;
    CHECK(total == 2662);
}

TEST_CASE("root multiset converts to the divisor basis") {
    // roots of t^2 - t + 1
    RootMultiset r = bp_root_multiset({2, 3});
    Divisor d = root_multiset_to_divisor(r);
    Divisor expected;
    expected.add(6, Rat(1));
    expected.add(2, Rat(-1));
    expected.add(3, Rat(-1));
    expected.add(1, Rat(1));
    CHECK(d == expected);
}

TEST_CASE("expansion of product forms") {
    ProductForm tri;
    tri.a[6] = 1;
    tri.a[2] = -1;
    tri.a[3] = -1;
    tri.e1 = 1;
    CHECK(expand_polynomial(tri) == std::vector<Int>{1, -1, 1});

    ProductForm tp1;
    tp1.a[2] = 1;
    tp1.e1 = -1;
    CHECK(expand_polynomial(tp1) == std::vector<Int>{1, 1});

    ProductForm bad;
    bad.a[2] = -2;
    CHECK_THROWS_AS(expand_polynomial(bad), NotAPolynomial);
}

TEST_CASE("bp oracle matches the divisor pipeline") {
    // exhaustive for two and three variables, sampled for four and five
    for (std::int64_t a = 2; a <= 6; ++a) {
        for (std::int64_t b = 2; b <= 6; ++b) {
            Divisor direct = factor_divisor(a, 1) * factor_divisor(b, 1);
            CHECK(root_multiset_to_divisor(bp_root_multiset({a, b})) == direct);
        }
    }
    for (std::int64_t a = 2; a <= 6; ++a)
        for (std::int64_t b = 2; b <= 6; ++b)
            for (std::int64_t c = 2; c <= 6; ++c) {
                std::int64_t l = std::lcm(std::lcm(a, b), c);
                WeightSystem ws = make_weight_system({l / a, l / b, l / c}, l);
                CHECK(root_multiset_to_divisor(bp_root_multiset({a, b, c})) ==
                      alexander_divisor(ws));
            }

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> adist(2, 6);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<std::int64_t> exps;
        int m = 4 + (iter % 2);
        std::int64_t l = 1;
        for (int i = 0; i < m; ++i) {
            exps.push_back(adist(rng));
            l = std::lcm(l, exps.back());
        }
        std::vector<std::int64_t> w;
        for (std::int64_t a : exps) w.push_back(l / a);
        WeightSystem ws = make_weight_system(w, l);
        Divisor lhs = root_multiset_to_divisor(bp_root_multiset(exps));
        Divisor rhs = alexander_divisor(ws);
        CHECK(lhs == rhs);
        ProductForm p = to_product_form(rhs);
        std::vector<Int> coeffs = expand_polynomial(p);
        CHECK(eval_coeffs(coeffs, Int(1)) == eval_product_form(p, 1));
        CHECK(eval_coeffs(coeffs, Int(-1)) == eval_product_form(p, -1));
    }
}

TEST_CASE("exhaustive decomposition oracle on pinned inputs") {
    {
        auto decs = exhaustive_decompose(make_weight_system({1, 2, 2}, 4));
        bool has_bp = false;
        for (const auto& d : decs) {
            bool all_bp = true;
            for (const auto& b : d.blocks) all_bp = all_bp && b.kind == BlockKind::BP;
            has_bp = has_bp || all_bp;
        }
        CHECK(has_bp);
    }
    {
        auto decs = exhaustive_decompose(make_weight_system({1, 1, 1}, 2));
        SingularityDecomposition bp{{
            Block{BlockKind::BP, {0}, {2}},
            Block{BlockKind::BP, {1}, {2}},
            Block{BlockKind::BP, {2}, {2}},
        }};
        CHECK(std::find(decs.begin(), decs.end(), bp) != decs.end());
    }
    CHECK_THROWS_AS(exhaustive_decompose(make_weight_system({1, 1, 1}, 100)),
                    ScaleExceeded);
}

TEST_CASE("expansion degree guard") {
    ProductForm huge;
    huge.a[50001] = 1;
    CHECK_THROWS_AS(expand_polynomial(huge), ScaleExceeded);
}
