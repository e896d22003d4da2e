#pragma once

#include <utility>

#include "linkhom/divisor.hpp"
#include "linkhom/weights.hpp"

namespace linkhom {

// Everything the Alexander polynomial of a link determines without torsion:
// the divisor, its factored form, the middle Betti number and the values at
// +-1. betti == e1 + sum a_j and degree_of(form) == mu, both enforced by
// tests rather than construction.
struct AlexanderData {
    Divisor divisor;
    ProductForm form;
    Int betti;
    Int delta_one;
    Int delta_minus_one;
};

// prod_i (L_{u_i}/v_i - 1) expanded in the divisor ring. Integral for every
// genuine link.
Divisor alexander_divisor(const WeightSystem& ws);

AlexanderData alexander_data(const WeightSystem& ws);

// Betti number read off the product form: e1 + sum_j a_j.
Int betti_via_form(const WeightSystem& ws);

// Independent route: the signed sum over all 2^m subsets of
// u.../(v... * lcm(u...)), with empty product 1 and lcm() = 1.
Int betti_via_subsets(const WeightSystem& ws);

// (Delta(1), Delta(-1)), exact.
std::pair<Int, Int> delta_values(const WeightSystem& ws);

}  // namespace linkhom
