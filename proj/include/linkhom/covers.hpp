#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkhom/alexander.hpp"
#include "linkhom/divisor.hpp"
#include "linkhom/weights.hpp"

namespace linkhom {

// What the cover construction g = z0^p + f lets us conclude about the cover
// link. Standard/Kervaire are decided via the mod-8 criterion, which needs a
// 7-dimensional base (9-dimensional cover).
enum class SphereType {
    NotRationalHomologySphere,  // base has positive middle Betti number
    RationalHomologySphere,
    StandardSphere,
    KervaireSphere,
    SphereUndecidable,
};

std::string to_string(SphereType t);

struct CoverRecord {
    std::int64_t p;
    WeightSystem base;
    WeightSystem cover_ws;
    std::int64_t fano_excess;  // |w_g| - d_g
    Int delta_one;
    Int delta_minus_one;
    SphereType sphere_type;
};

// Weight system of the p-fold cover: d_g = lcm(p, d_f),
// w_g = (d_f/gcd(p,d_f), (p/gcd(p,d_f)) * w_f).
WeightSystem branch_cover(const WeightSystem& base, std::int64_t p);

// Product form of Delta_g = (L_p - 1) * div Delta_f. Requires gcd(p, d) = 1;
// throws CoprimalityViolated otherwise.
ProductForm cover_delta_form(const WeightSystem& base, std::int64_t p);

SphereType cover_sphere_type(const WeightSystem& base, std::int64_t p);

CoverRecord cover_record(const WeightSystem& base, std::int64_t p);

// Decomposition of an even-degree weight vector as
// (m2 v0, m2 v1, m2 v2, m3 v3, m3 v4) with m2 odd, m3 even, coprime,
// m2*m3 = d, and n(w) = m2/(v3 v4) - 1/v3 - 1/v4 a positive integer. The
// predicted divisor must also reproduce the actual one; candidates failing
// that are rejected.
struct EvenSplit {
    std::int64_t m2 = 0;
    std::int64_t m3 = 0;
    std::vector<int> m2_vars;           // three indices
    std::vector<int> m3_vars;           // two indices
    std::vector<std::int64_t> v;        // per-variable cofactor, all m indices
    std::int64_t n_w = 0;

    // n(w) L_d + L_{m3} - n(w) L_{m2} - 1
    Divisor predicted_divisor(std::int64_t d) const;
    // m3^{n(w)+1}
    Int torsion_order() const;
};

std::vector<EvenSplit> even_degree_splits(const WeightSystem& ws);
std::optional<EvenSplit> even_degree_split(const WeightSystem& ws);

// A two-variable cycle relation d = w_j + a_i w_i = w_i + a_j w_j certifying
// the cycle block z_j z_i^{a_i} + z_i z_j^{a_j}. Searched over all variable
// pairs; throws WitnessNotFound if none exists.
struct CycleWitness {
    int i = 0, j = 0;
    std::int64_t ai = 0, aj = 0;
};

CycleWitness cycle_block_witness(const EvenSplit& split, const WeightSystem& ws);

}  // namespace linkhom
