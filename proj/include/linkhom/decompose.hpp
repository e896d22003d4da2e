#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkhom/weights.hpp"

namespace linkhom {

enum class BlockKind { BP, Chain, Cycle };

// One summand of an invertible polynomial. vars is the ordered list of
// variable indices; exps the matching exponents:
//   BP     z^a                    (one variable, a >= 2)
//   Chain  z1^a1 + z1 z2^a2 + ... (head a1 >= 2, tails >= 1)
//   Cycle  zk z1^a1 + z1 z2^a2 + ... (all >= 1, cyclic predecessor cofactor)
struct Block {
    BlockKind kind;
    std::vector<int> vars;
    std::vector<std::int64_t> exps;

    int min_var() const;
    bool operator==(const Block& o) const = default;
};

struct SingularityDecomposition {
    std::vector<Block> blocks;

    bool operator==(const SingularityDecomposition& o) const = default;
};

// Structural validity: block shapes, exponent lower bounds, the even-length
// cycle parity exclusion, and the blocks partitioning {0..m-1}.
bool structurally_valid(const SingularityDecomposition& dec, std::size_t var_count);

// True iff every monomial of the decomposition has weighted degree d.
bool verify_decomposition(const SingularityDecomposition& dec, const WeightSystem& ws);

// All decompositions of (w, d) into BP/chain/cycle blocks, canonicalized
// (cycles rotated to smallest variable first, blocks sorted BP < Chain <
// Cycle then by smallest variable) and deduplicated. Deterministic order;
// empty if the weight system is not of a supported type.
std::vector<SingularityDecomposition> find_decompositions(const WeightSystem& ws);

// "BP + Cycle", "Chain + Chain", ... with all BP blocks merged into a single
// "BP" token, matching the catalog's Type column.
std::string type_label(const SingularityDecomposition& dec);

// Monomial string, e.g. "z0^9+z1^9+z4 z2^2+z2 z3^2+z3 z4^19".
std::string render_polynomial(const SingularityDecomposition& dec, const WeightSystem& ws);

// Weight system of z_0^2 + ... + z_{k-1}^2 + f. Even d keeps the degree and
// prepends k weights d/2; odd d doubles everything first.
WeightSystem thom_sebastiani_extend(const WeightSystem& ws, int k);

}  // namespace linkhom
