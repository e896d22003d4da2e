#pragma once

#include <vector>

#include "linkhom/numbers.hpp"
#include "linkhom/weights.hpp"

namespace linkhom {

// Output of the torsion algorithm. c and k are indexed by subset bitmask of
// {0..n}; d is the torsion coefficient list d_1 >= d_2 >= ... >= d_r in
// descending divisibility, 1-entries still included.
struct OrlikData {
    std::vector<Int> c;
    std::vector<Rat> k;
    Int r;
    std::vector<Int> d;
};

// The inductive gcd quotients c_S. c of the full subset uses the convention
// gcd() = 0; it is recorded but never contributes (its k is 0).
// Throws NonIntegralOrlikC if a division fails.
std::vector<Int> orlik_c(const UVData& uv);

// The signed rational sums k_S, with epsilon_q = 1 for odd q and 0 for even.
std::vector<Rat> orlik_k(const UVData& uv);

// r = floor(max k) and d_j = prod over {S : k_S >= j} of c_S.
OrlikData orlik_torsion(const UVData& uv);

struct HomologyGroup {
    Int rank = 0;
    std::vector<Int> torsion;  // entries >= 2, each divides its predecessor

    bool operator==(const HomologyGroup& o) const = default;
};

// Middle homology of the link: rank from the divisor, torsion from the
// algorithm above with trivial d_j dropped.
HomologyGroup homology(const WeightSystem& ws);

}  // namespace linkhom
