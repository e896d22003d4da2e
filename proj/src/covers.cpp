#include "linkhom/covers.hpp"

#include <algorithm>

#include "linkhom/errors.hpp"

namespace linkhom {

std::string to_string(SphereType t) {
    switch (t) {
        case SphereType::NotRationalHomologySphere: return "not_rational_homology_sphere";
        case SphereType::RationalHomologySphere: return "rational_homology_sphere";
        case SphereType::StandardSphere: return "standard_sphere";
        case SphereType::KervaireSphere: return "kervaire_sphere";
        case SphereType::SphereUndecidable: return "undecidable";
    }
    return "?";
}

WeightSystem branch_cover(const WeightSystem& base, std::int64_t p) {
    if (p < 2) throw Error("branch cover requires p >= 2");
    std::int64_t g = gcd_i64(p, base.degree);
    std::vector<std::int64_t> w;
    w.reserve(base.weights.size() + 1);
    w.push_back(base.degree / g);
    for (std::int64_t wi : base.weights) w.push_back((p / g) * wi);
    return make_weight_system(std::move(w), (base.degree / g) * p);
}

ProductForm cover_delta_form(const WeightSystem& base, std::int64_t p) {
    if (p < 2) throw Error("branch cover requires p >= 2");
    if (gcd_i64(p, base.degree) != 1)
        throw CoprimalityViolated("gcd(p, d) = " +
                                  std::to_string(gcd_i64(p, base.degree)) +
                                  " but the cover formulas assume 1");
    Divisor dg = (Divisor::lambda(p) - Divisor::one()) * alexander_divisor(base);
    return to_product_form(dg);
}

SphereType cover_sphere_type(const WeightSystem& base, std::int64_t p) {
    if (gcd_i64(p, base.degree) != 1)
        throw CoprimalityViolated("gcd(p, d) must be 1 for the sphere criterion");
    std::size_t m = base.var_count();
    if (m % 2 == 0)
        throw DimensionUnsupported(
            "mod-8 criterion needs an odd-variable cover; base has m = " +
            std::to_string(m));
    Int b = betti_via_form(base);
    if (sgn(b) > 0) return SphereType::NotRationalHomologySphere;
    if (m != 5) return SphereType::SphereUndecidable;

    Int dm1 = eval_product_form(cover_delta_form(base, p), -1);
    Int residue = dm1 % 8;  // GMP truncates toward zero; normalize to [0,8)
    if (sgn(residue) < 0) residue += 8;
    if (residue == 1 || residue == 7) return SphereType::StandardSphere;
    if (residue == 3 || residue == 5) return SphereType::KervaireSphere;
    throw Error("Delta_g(-1) = " + dm1.get_str() +
                " is even; impossible for a homotopy sphere cover");
}

CoverRecord cover_record(const WeightSystem& base, std::int64_t p) {
    CoverRecord rec;
    rec.p = p;
    rec.base = base;
    rec.cover_ws = branch_cover(base, p);
    rec.fano_excess = rec.cover_ws.weight_sum() - rec.cover_ws.degree;
    ProductForm form = cover_delta_form(base, p);
    rec.delta_one = eval_product_form(form, 1);
    rec.delta_minus_one = eval_product_form(form, -1);
    rec.sphere_type = cover_sphere_type(base, p);
    return rec;
}

Divisor EvenSplit::predicted_divisor(std::int64_t d) const {
    Divisor dv;
    dv.add(d, Rat(n_w));
    dv.add(m3, Rat(1));
    dv.add(m2, Rat(-n_w));
    dv.add(1, Rat(-1));
    return dv;
}

Int EvenSplit::torsion_order() const {
    return pow_int(Int(m3), static_cast<unsigned long>(n_w) + 1);
}

std::vector<EvenSplit> even_degree_splits(const WeightSystem& ws) {
    std::vector<EvenSplit> out;
    if (ws.degree % 2 != 0 || ws.var_count() != 5) return out;
    std::int64_t d = ws.degree;
    Divisor actual = alexander_divisor(ws);

    for (std::int64_t m2 = 1; m2 <= d; ++m2) {
        if (d % m2 != 0 || m2 % 2 == 0) continue;
        std::int64_t m3 = d / m2;
        if (gcd_i64(m2, m3) != 1) continue;
        // m3 carries all factors of two since d is even and m2 odd.

        // choose the two m3-side variables
        for (int x = 0; x < 5; ++x) {
            for (int y = x + 1; y < 5; ++y) {
                if (ws.weights[x] % m3 != 0 || ws.weights[y] % m3 != 0) continue;
                bool ok = true;
                std::vector<std::int64_t> v(5, 0);
                EvenSplit sp;
                sp.m2 = m2;
                sp.m3 = m3;
                for (int i = 0; i < 5 && ok; ++i) {
                    if (i == x || i == y) {
                        v[i] = ws.weights[i] / m3;
                        continue;
                    }
                    if (ws.weights[i] % m2 != 0) {
                        ok = false;
                        break;
                    }
                    v[i] = ws.weights[i] / m2;
                    sp.m2_vars.push_back(i);
                }
                if (!ok) continue;
                sp.m3_vars = {x, y};
                sp.v = v;

                // n(w) = m2/(v3 v4) - 1/v3 - 1/v4 must be a positive integer
                Rat nw = make_rat(Int(m2), Int(v[x]) * Int(v[y])) -
                         make_rat(Int(1), Int(v[x])) - make_rat(Int(1), Int(v[y]));
                if (!is_integral(nw) || sgn(nw) <= 0) continue;
                sp.n_w = to_i64(nw.get_num(), "n(w)");

                if (!(sp.predicted_divisor(d) == actual)) continue;
                out.push_back(std::move(sp));
            }
        }
    }
    return out;
}

std::optional<EvenSplit> even_degree_split(const WeightSystem& ws) {
    std::vector<EvenSplit> all = even_degree_splits(ws);
    if (all.empty()) return std::nullopt;
    return all.front();
}

CycleWitness cycle_block_witness(const EvenSplit& split, const WeightSystem& ws) {
    (void)split;  // the witness lives on the weight vector itself
    std::int64_t d = ws.degree;
    for (int i = 0; i < static_cast<int>(ws.var_count()); ++i) {
        for (int j = i + 1; j < static_cast<int>(ws.var_count()); ++j) {
            std::int64_t wi = ws.weights[i], wj = ws.weights[j];
            if (d <= wj || d <= wi) continue;
            if ((d - wj) % wi != 0 || (d - wi) % wj != 0) continue;
            CycleWitness cw;
            cw.i = i;
            cw.j = j;
            cw.ai = (d - wj) / wi;
            cw.aj = (d - wi) / wj;
            if (cw.ai < 1 || cw.aj < 1) continue;
            return cw;
        }
    }
    throw WitnessNotFound("no two-variable cycle relation in " + ws.to_string());
}

}  // namespace linkhom
