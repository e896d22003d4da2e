#include <doctest.h>

#include <algorithm>

#include "linkhom/decompose.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/oracle.hpp"

using namespace linkhom;

namespace {

bool contains(const std::vector<SingularityDecomposition>& decs,
              const SingularityDecomposition& wanted) {
    return std::find(decs.begin(), decs.end(), wanted) != decs.end();
}

}  // namespace

TEST_CASE("verify_decomposition checks the degree conditions") {
    WeightSystem ws = make_weight_system({77, 77, 333, 180, 27});
    REQUIRE(ws.degree == 693);
    SingularityDecomposition good{{
        Block{BlockKind::BP, {0}, {9}},
        Block{BlockKind::BP, {1}, {9}},
        Block{BlockKind::Cycle, {2, 3, 4}, {2, 2, 19}},
    }};
    CHECK(verify_decomposition(good, ws));

    // 693 / 333 is not an integer, so no BP block on z2 works
    for (std::int64_t a = 2; a < 30; ++a) {
        SingularityDecomposition bad{{
            Block{BlockKind::BP, {2}, {a}},
            Block{BlockKind::BP, {0}, {9}},
            Block{BlockKind::BP, {1}, {9}},
            Block{BlockKind::Cycle, {3, 4}, {2, 2}},
        }};
        CHECK_FALSE(verify_decomposition(bad, ws));
    }

    WeightSystem k3 = make_weight_system({1, 1, 1, 4, 6});
    SingularityDecomposition bp{{
        Block{BlockKind::BP, {0}, {12}},
        Block{BlockKind::BP, {1}, {12}},
        Block{BlockKind::BP, {2}, {12}},
        Block{BlockKind::BP, {3}, {3}},
        Block{BlockKind::BP, {4}, {2}},
    }};
    CHECK(verify_decomposition(bp, k3));
}

TEST_CASE("find_decompositions reproduces published representations") {
    auto decs = find_decompositions(make_weight_system({13, 143, 775, 620, 465}));
    SingularityDecomposition chain_cycle{{
        Block{BlockKind::Chain, {0, 1}, {155, 14}},
        Block{BlockKind::Cycle, {2, 3, 4}, {2, 2, 3}},
    }};
    CHECK(contains(decs, chain_cycle));
    REQUIRE(!decs.empty());
    CHECK(type_label(decs.front()) == "Chain + Cycle");

    auto cyc = find_decompositions(make_weight_system({9142, 3097, 1917, 4129, 149}));
    SingularityDecomposition five_cycle{{
        Block{BlockKind::Cycle, {0, 1, 2, 3, 4}, {2, 3, 8, 4, 96}},
    }};
    CHECK(contains(cyc, five_cycle));
    for (const auto& d : cyc) CHECK(type_label(d) == "Cycle");

    auto bps = find_decompositions(make_weight_system({1, 2, 2}, 4));
    SingularityDecomposition all_bp{{
        Block{BlockKind::BP, {0}, {4}},
        Block{BlockKind::BP, {1}, {2}},
        Block{BlockKind::BP, {2}, {2}},
    }};
    CHECK(contains(bps, all_bp));
}

TEST_CASE("every found decomposition verifies") {
    for (auto w : {std::vector<std::int64_t>{77, 77, 333, 180, 27},
                   std::vector<std::int64_t>{13, 143, 775, 620, 465},
                   std::vector<std::int64_t>{7, 3, 1, 10, 1},
                   std::vector<std::int64_t>{1, 1, 1, 4, 6}}) {
        WeightSystem ws = make_weight_system(w);
        auto decs = find_decompositions(ws);
        CHECK(!decs.empty());
        for (const auto& d : decs) CHECK(verify_decomposition(d, ws));
    }
}

TEST_CASE("type labels merge BP blocks") {
    SingularityDecomposition d1{{
        Block{BlockKind::BP, {0}, {9}},
        Block{BlockKind::BP, {1}, {9}},
        Block{BlockKind::Cycle, {2, 3, 4}, {2, 2, 19}},
    }};
    CHECK(type_label(d1) == "BP + Cycle");

    SingularityDecomposition d2{{
        Block{BlockKind::Chain, {0, 1}, {155, 14}},
        Block{BlockKind::Cycle, {2, 3, 4}, {2, 2, 3}},
    }};
    CHECK(type_label(d2) == "Chain + Cycle");

    SingularityDecomposition d3{{
        Block{BlockKind::BP, {0}, {12}},
        Block{BlockKind::BP, {1}, {12}},
        Block{BlockKind::BP, {2}, {12}},
        Block{BlockKind::BP, {3}, {3}},
        Block{BlockKind::BP, {4}, {2}},
    }};
    CHECK(type_label(d3) == "BP");
}

TEST_CASE("render_polynomial matches the catalog style") {
    WeightSystem ws = make_weight_system({77, 77, 333, 180, 27});
    SingularityDecomposition dec{{
        Block{BlockKind::BP, {0}, {9}},
        Block{BlockKind::BP, {1}, {9}},
        Block{BlockKind::Cycle, {2, 3, 4}, {2, 2, 19}},
    }};
    CHECK(render_polynomial(dec, ws) == "z0^9+z1^9+z4 z2^2+z2 z3^2+z3 z4^19");

    WeightSystem k3 = make_weight_system({1, 1, 1, 4, 6});
    SingularityDecomposition bp{{
        Block{BlockKind::BP, {0}, {12}},
        Block{BlockKind::BP, {1}, {12}},
        Block{BlockKind::BP, {2}, {12}},
        Block{BlockKind::BP, {3}, {3}},
        Block{BlockKind::BP, {4}, {2}},
    }};
    CHECK(render_polynomial(bp, k3) == "z0^12+z1^12+z2^12+z3^3+z4^2");

    WeightSystem cc = make_weight_system({13, 143, 775, 620, 465});
    SingularityDecomposition chain{{
        Block{BlockKind::Chain, {0, 1}, {155, 14}},
        Block{BlockKind::Cycle, {2, 3, 4}, {2, 2, 3}},
    }};
    CHECK(render_polynomial(chain, cc) ==
          "z0^155+z0 z1^14+z4 z2^2+z2 z3^2+z3 z4^3");
}

TEST_CASE("cycle parity rule excludes the all-ones patterns") {
    // d = w0 + w1 makes a 2-cycle with a0 = a1 = 1 arithmetically consistent,
    // but the definition rejects it.
    WeightSystem ws = make_weight_system({2, 3, 1}, 5);
    SingularityDecomposition dec{{
        Block{BlockKind::BP, {2}, {5}},
        Block{BlockKind::Cycle, {0, 1}, {1, 1}},
    }};
    CHECK_FALSE(verify_decomposition(dec, ws));
    for (const auto& d : find_decompositions(ws))
        for (const auto& b : d.blocks)
            if (b.kind == BlockKind::Cycle && b.vars.size() % 2 == 0) {
                bool odd_all = true, even_all = true;
                for (std::size_t p = 0; p < b.exps.size(); ++p) {
                    if (p % 2 == 0) odd_all = odd_all && b.exps[p] == 1;
                    else even_all = even_all && b.exps[p] == 1;
                }
                CHECK_FALSE(odd_all);
                CHECK_FALSE(even_all);
            }
}

TEST_CASE("completeness against the exhaustive oracle at small scale") {
    int checked = 0;
    for (std::int64_t w0 = 1; w0 <= 12; ++w0) {
        for (std::int64_t w1 = w0; w1 <= 12; ++w1) {
            for (std::int64_t w2 = w1; w2 <= 12; ++w2) {
                if (gcd_i64(gcd_i64(w0, w1), w2) != 1) continue;
                for (std::int64_t d : {w0 + w1 + w2 - 1, w0 + w1 + w2, 2 * w2, 3 * w2,
                                       w0 + 2 * w1, 40 - w0}) {
                    if (d < 1 || d > 40) continue;
                    WeightSystem ws = make_weight_system({w0, w1, w2}, d);
                    auto fast = find_decompositions(ws);
                    auto slow = exhaustive_decompose(ws);
                    CHECK(fast == slow);
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 300);
}

TEST_CASE("thom_sebastiani_extend") {
    WeightSystem quad = thom_sebastiani_extend(make_weight_system({1, 1, 1}, 2), 2);
    CHECK(quad.weights == std::vector<std::int64_t>{1, 1, 1, 1, 1});
    CHECK(quad.degree == 2);

    WeightSystem odd = thom_sebastiani_extend(make_weight_system({7, 3, 1, 10, 1}), 2);
    CHECK(odd.weights == std::vector<std::int64_t>{21, 21, 14, 6, 2, 20, 2});
    CHECK(odd.degree == 42);

    WeightSystem same = thom_sebastiani_extend(make_weight_system({1, 1, 1, 4, 6}), 0);
    CHECK(same == make_weight_system({1, 1, 1, 4, 6}));
}
