#include "linkhom/alexander.hpp"

namespace linkhom {

Divisor alexander_divisor(const WeightSystem& ws) {
    UVData uv = uv_data(ws);
    Divisor d = Divisor::one();
    for (std::size_t i = 0; i < uv.size(); ++i)
        d = d * factor_divisor(uv.u[i], uv.v[i]);
    return d;
}

AlexanderData alexander_data(const WeightSystem& ws) {
    AlexanderData ad;
    ad.divisor = alexander_divisor(ws);
    ad.form = to_product_form(ad.divisor);
    ad.betti = ad.form.e1;
    for (const auto& [j, aj] : ad.form.a) ad.betti += aj;
    ad.delta_one = eval_product_form(ad.form, 1);
    ad.delta_minus_one = eval_product_form(ad.form, -1);
    return ad;
}

Int betti_via_form(const WeightSystem& ws) {
    ProductForm p = to_product_form(alexander_divisor(ws));
    Int b = p.e1;
    for (const auto& [j, aj] : p.a) b += aj;
    return b;
}

Int betti_via_subsets(const WeightSystem& ws) {
    UVData uv = uv_data(ws);
    std::size_t m = uv.size();
    Rat b(0);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Int num(1), den(1), l(1);
        int s = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask & (1u << i))) continue;
            ++s;
            num *= uv.u[i];
            den *= uv.v[i];
            l = lcm(l, Int(uv.u[i]));
        }
        Rat term = make_rat(num, den * l);
        // sign (-1)^{(n+1)-s} = (-1)^{m-s}
        if ((static_cast<int>(m) - s) % 2 != 0) term = -term;
        b += term;
    }
    if (!is_integral(b))
        throw NonIntegralDivisor("subset Betti formula gave a non-integer for " +
                                 ws.to_string());
    return b.get_num();
}

std::pair<Int, Int> delta_values(const WeightSystem& ws) {
    ProductForm p = to_product_form(alexander_divisor(ws));
    return {eval_product_form(p, 1), eval_product_form(p, -1)};
}

}  // namespace linkhom
