#include <doctest.h>

#include "linkhom/alexander.hpp"
#include "linkhom/covers.hpp"
#include "linkhom/errors.hpp"

using namespace linkhom;

TEST_CASE("branch cover weight systems") {
    WeightSystem g = branch_cover(make_weight_system({13, 143, 775, 620, 465}), 2);
    CHECK(g.weights == std::vector<std::int64_t>{2015, 26, 286, 1550, 1240, 930});
    CHECK(g.degree == 4030);

    WeightSystem same_d = branch_cover(make_weight_system({1, 1, 1, 4, 6}), 12);
    CHECK(same_d.degree == 12);
    CHECK(same_d.weights.front() == 1);

    WeightSystem g3 = branch_cover(make_weight_system({118, 118, 185, 135, 35}), 3);
    CHECK(g3.degree == 1770);
    CHECK(g3.weights == std::vector<std::int64_t>{590, 354, 354, 555, 405, 105});

    // |w_g| - d_g = (d + p(|w| - d)) / gcd(p, d)
    for (std::int64_t p : {2, 3, 5, 7, 12}) {
        WeightSystem base = make_weight_system({1, 1, 1, 4, 6});
        WeightSystem cover = branch_cover(base, p);
        std::int64_t g = gcd_i64(p, base.degree);
        CHECK(cover.weight_sum() - cover.degree ==
              (base.degree + p * (base.weight_sum() - base.degree)) / g);
    }
}

TEST_CASE("cover delta form needs coprime p") {
    CHECK_THROWS_AS(cover_delta_form(make_weight_system({118, 118, 185, 135, 35}), 2),
                    CoprimalityViolated);
}

TEST_CASE("cover of a rational homology sphere is a homotopy sphere") {
    WeightSystem base = make_weight_system({1945, 477, 1321, 148, 1871});
    ProductForm f = cover_delta_form(base, 2);
    CHECK(eval_product_form(f, 1) == 1);

    // Delta_g(1) = p^{b3(base)} in general
    for (std::int64_t p : {5, 7, 11}) {
        WeightSystem k3 = make_weight_system({1, 1, 1, 4, 6});
        ProductForm fg = cover_delta_form(k3, p);
        Int b = fg.e1;
        for (const auto& [j, aj] : fg.a) b += aj;
        CHECK(b == 0);  // the cover is always a rational homology sphere
        CHECK(eval_product_form(fg, 1) ==
              pow_int(Int(p), betti_via_form(k3).get_ui()));
    }
}

TEST_CASE("sphere types for the even-degree bases") {
    WeightSystem b1 = make_weight_system({118, 118, 185, 135, 35});
    ProductForm f1 = cover_delta_form(b1, 3);
    CHECK(eval_product_form(f1, -1) == 81);  // 3^4
    CHECK(cover_sphere_type(b1, 3) == SphereType::StandardSphere);

    WeightSystem b2 = make_weight_system({64, 512, 475, 375, 175});
    ProductForm f2 = cover_delta_form(b2, 3);
    CHECK(eval_product_form(f2, -1) == 27);  // 3^3
    CHECK(cover_sphere_type(b2, 3) == SphereType::KervaireSphere);

    // odd base degree, odd p: always the standard sphere (5761 = 7 * 823)
    WeightSystem b3 = make_weight_system({1945, 477, 1321, 148, 1871});
    for (std::int64_t p : {3, 9, 13}) {
        CHECK(cover_sphere_type(b3, p) == SphereType::StandardSphere);
    }
}

TEST_CASE("delta_g(-1) = p^(sum of even-period exponents) for odd p, even d") {
    for (std::int64_t p : {3, 7}) {
        WeightSystem base = make_weight_system({118, 118, 185, 135, 35});
        ProductForm bf = to_product_form(alexander_divisor(base));
        Int even_sum = 0;
        for (const auto& [j, aj] : bf.a)
            if (j % 2 == 0) even_sum += aj;
        ProductForm cf = cover_delta_form(base, p);
        CHECK(eval_product_form(cf, -1) ==
              pow_int(Int(p), even_sum.get_ui()));
    }
}

TEST_CASE("covers of links with free homology are not homotopy spheres") {
    WeightSystem k3 = make_weight_system({1, 1, 1, 4, 6});
    CHECK(cover_sphere_type(k3, 5) == SphereType::NotRationalHomologySphere);
    CoverRecord rec = cover_record(make_weight_system({1945, 477, 1321, 148, 1871}), 2);
    CHECK(rec.delta_one == 1);
    CHECK(rec.sphere_type == SphereType::StandardSphere);
    CHECK(rec.fano_excess > 0);
}

TEST_CASE("even degree splits on the three even catalog rows") {
    {
        auto sp = even_degree_split(make_weight_system({118, 118, 185, 135, 35}));
        REQUIRE(sp.has_value());
        CHECK(sp->m3 == 118);
        CHECK(sp->m2 == 5);
        CHECK(sp->n_w == 3);
        CHECK(sp->torsion_order() == pow_int(Int(118), 4));
        CHECK(sp->predicted_divisor(590) ==
              alexander_divisor(make_weight_system({118, 118, 185, 135, 35})));
    }
    {
        auto sp = even_degree_split(make_weight_system({64, 512, 475, 375, 175}));
        REQUIRE(sp.has_value());
        CHECK(sp->m3 == 64);
        CHECK(sp->m2 == 25);
        CHECK(sp->n_w == 2);
        CHECK(sp->torsion_order() == pow_int(Int(64), 3));
    }
    {
        auto sp = even_degree_split(make_weight_system({3532, 7064, 5355, 115, 1595}));
        REQUIRE(sp.has_value());
        CHECK(sp->m3 == 3532);
        CHECK(sp->n_w == 1);
        CHECK(sp->torsion_order() == pow_int(Int(3532), 2));
    }
    // odd degree: no split
    CHECK_FALSE(even_degree_split(make_weight_system({13, 143, 775, 620, 465})));
}

TEST_CASE("cycle block witnesses") {
    WeightSystem ws = make_weight_system({118, 118, 185, 135, 35});
    auto sp = even_degree_split(ws);
    REQUIRE(sp.has_value());
    CycleWitness cw = cycle_block_witness(*sp, ws);
    CHECK(ws.degree == ws.weights[cw.j] + cw.ai * ws.weights[cw.i]);
    CHECK(ws.degree == ws.weights[cw.i] + cw.aj * ws.weights[cw.j]);

    // no pair of (3,4,5), d=6 satisfies both relations
    EvenSplit dummy;
    CHECK_THROWS_AS(cycle_block_witness(dummy, make_weight_system({3, 4, 5}, 6)),
                    WitnessNotFound);
}
