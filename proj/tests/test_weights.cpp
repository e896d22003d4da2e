#include <doctest.h>

#include <random>

#include "linkhom/errors.hpp"
#include "linkhom/weights.hpp"

using namespace linkhom;

TEST_CASE("degree defaults to |w| - 1") {
    WeightSystem ws = make_weight_system({1, 1, 1, 4, 6});
    CHECK(ws.degree == 12);
    CHECK(ws.link_dim() == 7);

    WeightSystem big = make_weight_system({13, 143, 775, 620, 465});
    CHECK(big.degree == 2015);

    CHECK_THROWS_AS(make_weight_system({2, 2, 2}), NonPrimitiveWeights);
    CHECK_THROWS_AS(make_weight_system({1, 0, 1}), NonPrimitiveWeights);
    CHECK_THROWS_AS(make_weight_system({1, 1, 1}, 0), InvalidDegree);
    CHECK_THROWS_AS(make_weight_system({1}), InvalidDegree);
}

TEST_CASE("uv reduction") {
    UVData uv = uv_data(make_weight_system({13, 143, 775, 620, 465}));
    CHECK(uv.u == std::vector<std::int64_t>{155, 155, 13, 13, 13});
    CHECK(uv.v == std::vector<std::int64_t>{1, 11, 5, 4, 3});

    UVData k3 = uv_data(make_weight_system({1, 1, 1, 4, 6}));
    CHECK(k3.u == std::vector<std::int64_t>{12, 12, 12, 3, 2});
    CHECK(k3.v == std::vector<std::int64_t>{1, 1, 1, 1, 1});

    UVData cop = uv_data(make_weight_system({1945, 477, 1321, 148, 1871}));
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(cop.u[i] == 5761);
        CHECK(cop.v[i] == make_weight_system({1945, 477, 1321, 148, 1871}).weights[i]);
    }
}

TEST_CASE("uv identity u*v*gcd^2 = d*w") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> wdist(1, 200);
    std::uniform_int_distribution<std::int64_t> ddist(1, 2000);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::int64_t> w{wdist(rng), wdist(rng), wdist(rng)};
        std::int64_t g = gcd_i64(gcd_i64(w[0], w[1]), w[2]);
        for (auto& x : w) x /= g;
        WeightSystem ws = make_weight_system(w, ddist(rng));
        UVData uv = uv_data(ws);
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::int64_t gg = gcd_i64(ws.degree, ws.weights[i]);
            CHECK(Int(uv.u[i]) * uv.v[i] * gg * gg == Int(ws.degree) * ws.weights[i]);
        }
    }
}

TEST_CASE("milnor numbers") {
    CHECK(milnor_number(make_weight_system({1, 1, 1, 4, 6})) == Int(2662));
    // 21/10 - 1 is fractional yet the full product clears
    CHECK(milnor_number(make_weight_system({7, 3, 1, 10, 1})) == Int(5280));
    CHECK(milnor_number(make_weight_system({1945, 477, 1321, 148, 1871})) == Int(5760));
    // (6-1)/1 * (6-4)/4 * (6-4)/4 = 5/4
    CHECK_THROWS_AS(milnor_number(make_weight_system({1, 4, 4}, 6)), NonIntegralMilnor);
}

TEST_CASE("fano positivity") {
    CHECK(fano_positive(make_weight_system({1, 1, 1, 4, 6})));
    CHECK_FALSE(fano_positive(make_weight_system({1, 1, 1}, 3)));
    CHECK(fano_positive(make_weight_system({13, 143, 775, 620, 465})));
}
