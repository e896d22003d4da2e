#include "linkhom/weights.hpp"

#include <numeric>
#include <sstream>

#include "linkhom/errors.hpp"

namespace linkhom {

std::int64_t WeightSystem::weight_sum() const {
    std::int64_t s = 0;
    for (std::int64_t w : weights) s += w;
    return s;
}

std::string WeightSystem::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) os << ',';
        os << weights[i];
    }
    os << "), d=" << degree;
    return os.str();
}

WeightSystem make_weight_system(std::vector<std::int64_t> w, std::optional<std::int64_t> d) {
    // m = 2 carries no link but the divisor calculus is still meaningful
    // (needed for suspension factors and the BP oracle); links proper require
    // m >= 3, enforced at classification time.
    if (w.size() < 2 || w.size() > 8)
        throw InvalidDegree("supported variable counts are 2..8, got " +
                            std::to_string(w.size()));
    std::int64_t g = 0;
    for (std::int64_t wi : w) {
        if (wi < 1) throw NonPrimitiveWeights("weights must be positive integers");
        g = gcd_i64(g, wi);
    }
    if (g != 1)
        throw NonPrimitiveWeights("gcd of weights must be 1, got " + std::to_string(g));

    WeightSystem ws;
    ws.weights = std::move(w);
    ws.degree = d.value_or(ws.weight_sum() - 1);
    if (ws.degree < 1)
        throw InvalidDegree("degree must be >= 1, got " + std::to_string(ws.degree));
    return ws;
}

UVData uv_data(const WeightSystem& ws) {
    UVData uv;
    uv.u.reserve(ws.weights.size());
    uv.v.reserve(ws.weights.size());
    for (std::int64_t wi : ws.weights) {
        std::int64_t g = gcd_i64(ws.degree, wi);
        uv.u.push_back(ws.degree / g);
        uv.v.push_back(wi / g);
    }
    return uv;
}

Int milnor_number(const WeightSystem& ws) {
    Rat mu(1);
    for (std::int64_t wi : ws.weights)
        mu *= make_rat(Int(ws.degree - wi), Int(wi));
    if (!is_integral(mu))
        throw NonIntegralMilnor("prod(d/w_i - 1) is not an integer for " + ws.to_string());
    return mu.get_num();
}

bool fano_positive(const WeightSystem& ws) { return ws.weight_sum() - ws.degree > 0; }

}  // namespace linkhom
