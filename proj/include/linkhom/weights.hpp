#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkhom/numbers.hpp"

namespace linkhom {

// A weighted-homogeneous polynomial datum: the pair (w, d) from which every
// invariant here is computed. n = m - 1 in the classical indexing, link
// dimension is 2m - 3.
struct WeightSystem {
    std::vector<std::int64_t> weights;
    std::int64_t degree = 0;

    std::size_t var_count() const { return weights.size(); }
    int n() const { return static_cast<int>(weights.size()) - 1; }
    int link_dim() const { return 2 * static_cast<int>(weights.size()) - 3; }
    std::int64_t weight_sum() const;

    bool operator==(const WeightSystem& o) const {
        return weights == o.weights && degree == o.degree;
    }

    std::string to_string() const;
};

// If d is omitted it defaults to sum(w) - 1, the index-one Fano convention
// shared by every catalog entry. Throws NonPrimitiveWeights / InvalidDegree.
WeightSystem make_weight_system(std::vector<std::int64_t> w,
                                std::optional<std::int64_t> d = std::nullopt);

// The reduction u_i = d/gcd(d,w_i), v_i = w_i/gcd(d,w_i). Feeds both the
// divisor product and the torsion algorithm.
struct UVData {
    std::vector<std::int64_t> u;
    std::vector<std::int64_t> v;

    std::size_t size() const { return u.size(); }
};

UVData uv_data(const WeightSystem& ws);

// mu = prod_i (d/w_i - 1), exact; throws NonIntegralMilnor if the rational
// product does not clear (the factors themselves need not be integers).
Int milnor_number(const WeightSystem& ws);

// The positivity condition |w| - d > 0.
bool fano_positive(const WeightSystem& ws);

}  // namespace linkhom
