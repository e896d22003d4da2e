#include "linkhom/torsion.hpp"

#include <algorithm>
#include <bit>

#include "linkhom/alexander.hpp"
#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

const long kMaxTorsionRank = 4096;

}  // namespace

std::vector<Int> orlik_c(const UVData& uv) {
    std::size_t m = uv.size();
    unsigned full = (1u << m) - 1u;
    std::vector<Int> c(full + 1);

    // Subsets by increasing cardinality; every proper subset's c is needed
    // before its supersets.
    std::vector<unsigned> order(full + 1);
    for (unsigned mask = 0; mask <= full; ++mask) order[mask] = mask;
    std::stable_sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
        return std::popcount(a) < std::popcount(b);
    });

    for (unsigned mask : order) {
        Int num = 0;  // gcd over the complement; gcd() = 0
        for (std::size_t i = 0; i < m; ++i)
            if (!(mask & (1u << i))) num = gcd(num, Int(uv.u[i]));
        if (mask == 0) {
            c[0] = num;
            continue;
        }
        Int den = 1;
        for (unsigned sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
            den *= c[sub];
            if (sub == 0) break;
        }
        if (den == 0 || num % den != 0)
            throw NonIntegralOrlikC("c division failed at subset mask " +
                                    std::to_string(mask) + ": " + num.get_str() + " / " +
                                    den.get_str());
        c[mask] = num / den;
    }
    return c;
}

std::vector<Rat> orlik_k(const UVData& uv) {
    std::size_t m = uv.size();
    unsigned full = (1u << m) - 1u;
    std::vector<Rat> k(full + 1);

    // Per-subset u-product / (v-product * lcm(u)), shared by every k_S.
    std::vector<Rat> term(full + 1);
    std::vector<Int> l(full + 1);
    term[0] = Rat(1);
    l[0] = 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
        unsigned low = mask & (~mask + 1u);
        unsigned rest = mask & (mask - 1u);
        std::size_t i = static_cast<std::size_t>(std::countr_zero(low));
        l[mask] = lcm(l[rest], Int(uv.u[i]));
        Int num(1), den(1);
        for (std::size_t j = 0; j < m; ++j) {
            if (!(mask & (1u << j))) continue;
            num *= uv.u[j];
            den *= uv.v[j];
        }
        term[mask] = make_rat(num, den * l[mask]);
    }

    for (unsigned mask = 0; mask <= full; ++mask) {
        int s = std::popcount(mask);
        // epsilon_{n-s+1} with n = m-1
        if ((static_cast<int>(m) - s) % 2 == 0) {
            k[mask] = Rat(0);
            continue;
        }
        Rat sum(0);
        unsigned sub = mask;
        while (true) {
            int t = std::popcount(sub);
            if ((s - t) % 2 == 0)
                sum += term[sub];
            else
                sum -= term[sub];
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
        k[mask] = sum;
    }
    return k;
}

OrlikData orlik_torsion(const UVData& uv) {
    OrlikData od;
    od.c = orlik_c(uv);
    od.k = orlik_k(uv);

    Rat kmax(0);
    for (const Rat& kv : od.k)
        if (kv > kmax) kmax = kv;
    od.r = floor_rat(kmax);
    if (sgn(od.r) < 0) od.r = 0;
    if (od.r > kMaxTorsionRank)
        throw ScaleExceeded("torsion rank bound exceeded: r = " + od.r.get_str());

    for (Int j = 1; j <= od.r; ++j) {
        Int dj = 1;
        Rat jr(j);
        for (std::size_t mask = 0; mask < od.k.size(); ++mask)
            if (od.k[mask] >= jr) dj *= od.c[mask];
        od.d.push_back(dj);
    }
    return od;
}

HomologyGroup homology(const WeightSystem& ws) {
    HomologyGroup h;
    h.rank = betti_via_form(ws);
    OrlikData od = orlik_torsion(uv_data(ws));
    for (const Int& dj : od.d)
        if (dj >= 2) h.torsion.push_back(dj);
    return h;
}

}  // namespace linkhom
