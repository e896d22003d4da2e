#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "linkhom/decompose.hpp"
#include "linkhom/divisor.hpp"
#include "linkhom/weights.hpp"

namespace linkhom {

// Monodromy eigenvalue multiset: reduced fraction theta in [0,1) (the root
// e^{2 pi i theta}) -> multiplicity. Brute-force counterpart of the divisor
// calculus, used to anchor it.
using RootMultiset = std::map<Rat, Int>;

// Eigenvalues of a pure power sum with exponents a_i: all sums
// sum k_i/a_i mod 1 with 0 < k_i < a_i, enumerated directly.
// Guard: prod (a_i - 1) <= 10^6, else ScaleExceeded.
RootMultiset bp_root_multiset(const std::vector<std::int64_t>& exps);

// Unique expression of a root-of-unity multiset in the period basis,
// obtained by peeling periods from the largest denominator down. Works for
// any virtual multiset (integer multiplicities of either sign).
Divisor root_multiset_to_divisor(const RootMultiset& roots);

// Exact coefficient list (ascending powers) of
// (t-1)^e1 * prod (t^j-1)^{a_j}. Negative exponents are exact divisions;
// NotAPolynomial if a remainder survives. Degree guard 50000.
std::vector<Int> expand_polynomial(const ProductForm& p);

std::vector<Int> expand_polynomial(const ProductForm& p, std::int64_t max_degree);

// Evaluate an expanded coefficient list at an integer point.
Int eval_coeffs(const std::vector<Int>& coeffs, const Int& t);

// Reference decomposition search: enumerates every block shape and exponent
// assignment directly from the degree conditions. Only for m <= 4, d <= 60.
std::vector<SingularityDecomposition> exhaustive_decompose(const WeightSystem& ws);

}  // namespace linkhom
