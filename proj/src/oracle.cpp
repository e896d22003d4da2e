#include "linkhom/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

constexpr std::int64_t kRootCountGuard = 1000000;
constexpr std::int64_t kExpandDegreeGuard = 50000;
constexpr std::int64_t kExpandIntermediateGuard = 250000;

Rat reduced_fraction_mod1(const Int& num, const Int& den) {
    Rat q = make_rat(num, den);
    Int fl = floor_rat(q);
    return q - Rat(fl);
}

int euler_phi(std::int64_t q) {
    int count = 0;
    for (std::int64_t k = 0; k < q; ++k)
        if (gcd_i64(k, q) == 1) ++count;
    return count;
}

}  // namespace

RootMultiset bp_root_multiset(const std::vector<std::int64_t>& exps) {
    if (exps.empty()) throw Error("bp_root_multiset needs at least one exponent");
    Int total = 1;
    for (std::int64_t a : exps) {
        if (a < 2) throw Error("BP exponents must be >= 2");
        total *= (a - 1);
    }
    if (total > kRootCountGuard)
        throw ScaleExceeded("BP root enumeration too large: " + total.get_str());

    Int l = 1;
    for (std::int64_t a : exps) l = lcm(l, Int(a));

    RootMultiset roots;
    std::vector<std::int64_t> k(exps.size(), 1);
    while (true) {
        // theta = sum k_i / a_i mod 1, over the common denominator
        Int num = 0;
        for (std::size_t i = 0; i < exps.size(); ++i)
            num += Int(k[i]) * (l / exps[i]);
        roots[reduced_fraction_mod1(num, l)] += 1;

        std::size_t pos = 0;
        while (pos < k.size() && k[pos] == exps[pos] - 1) {
            k[pos] = 1;
            ++pos;
        }
        if (pos == k.size()) break;
        ++k[pos];
    }
    return roots;
}

Divisor root_multiset_to_divisor(const RootMultiset& roots) {
    std::map<Rat, Int> work;
    for (const auto& [th, mu] : roots)
        if (mu != 0) work[th] = mu;

    Divisor out;
    while (!work.empty()) {
        // Largest denominator still present.
        Int qz = 1;
        for (const auto& [th, mu] : work)
            if (th.get_den() > qz) qz = th.get_den();
        std::int64_t q = to_i64(qz, "root period");

        // Multiplicity must be constant across the primitive q-th roots.
        Int c;
        bool have = false;
        int present = 0;
        for (const auto& [th, mu] : work) {
            if (th.get_den() != qz) continue;
            ++present;
            if (!have) {
                c = mu;
                have = true;
            } else if (mu != c) {
                throw Error("root multiset is not Galois-stable at period " +
                            std::to_string(q));
            }
        }
        if (present != euler_phi(q))
            throw Error("root multiset misses primitive roots of period " +
                        std::to_string(q));

        out.add(q, Rat(c));
        for (std::int64_t kk = 0; kk < q; ++kk) {
            Rat th = reduced_fraction_mod1(Int(kk), Int(q));
            auto it = work.find(th);
            if (it == work.end()) {
                work.emplace(th, -c);
            } else {
                it->second -= c;
                if (it->second == 0) work.erase(it);
            }
        }
    }
    return out;
}

std::vector<Int> expand_polynomial(const ProductForm& p) {
    return expand_polynomial(p, kExpandDegreeGuard);
}

std::vector<Int> expand_polynomial(const ProductForm& p, std::int64_t max_degree) {
    Int final_deg = degree_of(p);
    if (sgn(final_deg) < 0)
        throw NotAPolynomial("negative total degree " + final_deg.get_str());
    if (final_deg > max_degree)
        throw ScaleExceeded("expansion degree " + final_deg.get_str() + " over guard");

    // (factor period, exponent), (t-1) folded in as period 1.
    std::vector<std::pair<std::int64_t, Int>> factors(p.a.begin(), p.a.end());
    if (p.e1 != 0) factors.emplace_back(1, p.e1);

    Int up = 0;
    for (const auto& [j, aj] : factors)
        if (sgn(aj) > 0) up += Int(j) * aj;
    if (up > kExpandIntermediateGuard)
        throw ScaleExceeded("intermediate expansion degree " + up.get_str() + " over guard");

    std::vector<Int> poly{1};
    // All multiplications first so divisions always see their factors.
    for (int phase = 0; phase < 2; ++phase) {
        for (const auto& [j, aj] : factors) {
            if ((phase == 0) != (sgn(aj) > 0)) continue;
            unsigned long reps = to_ulong_exponent(abs(aj), "|exponent|");
            for (unsigned long rep = 0; rep < reps; ++rep) {
                if (phase == 0) {
                    // poly *= t^j - 1
                    std::vector<Int> next(poly.size() + static_cast<std::size_t>(j));
                    for (std::size_t i = 0; i < poly.size(); ++i) {
                        next[i + static_cast<std::size_t>(j)] += poly[i];
                        next[i] -= poly[i];
                    }
                    poly = std::move(next);
                } else {
                    // poly /= t^j - 1, exactly
                    std::vector<Int> r = poly;
                    std::size_t jj = static_cast<std::size_t>(j);
                    if (r.size() <= jj)
                        throw NotAPolynomial("division by t^" + std::to_string(j) +
                                             "-1 leaves a remainder");
                    std::vector<Int> quot(r.size() - jj);
                    for (std::size_t i = r.size(); i-- > jj;) {
                        Int coef = r[i];
                        if (coef == 0) continue;
                        quot[i - jj] = coef;
                        r[i] = 0;
                        r[i - jj] += coef;
                    }
                    for (std::size_t i = 0; i < jj; ++i)
                        if (r[i] != 0)
                            throw NotAPolynomial("division by t^" + std::to_string(j) +
                                                 "-1 leaves a remainder");
                    poly = std::move(quot);
                }
            }
        }
    }
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    return poly;
}

Int eval_coeffs(const std::vector<Int>& coeffs, const Int& t) {
    Int v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * t + coeffs[i];
    return v;
}

namespace {

// Independent canonical form (duplicated from the search module on purpose:
// the oracle should not share its logic).
void oracle_canonicalize(SingularityDecomposition& dec) {
    for (Block& b : dec.blocks) {
        if (b.kind != BlockKind::Cycle) continue;
        auto it = std::min_element(b.vars.begin(), b.vars.end());
        auto shift = static_cast<std::size_t>(it - b.vars.begin());
        std::rotate(b.vars.begin(), b.vars.begin() + shift, b.vars.end());
        std::rotate(b.exps.begin(), b.exps.begin() + shift, b.exps.end());
    }
    std::sort(dec.blocks.begin(), dec.blocks.end(), [](const Block& x, const Block& y) {
        auto rank = [](BlockKind kk) { return kk == BlockKind::BP ? 0 : kk == BlockKind::Chain ? 1 : 2; };
        if (rank(x.kind) != rank(y.kind)) return rank(x.kind) < rank(y.kind);
        return x.min_var() < y.min_var();
    });
}

bool oracle_less(const SingularityDecomposition& a, const SingularityDecomposition& b) {
    auto key = [](const SingularityDecomposition& d) {
        std::vector<std::tuple<int, std::vector<int>, std::vector<std::int64_t>>> v;
        for (const Block& blk : d.blocks)
            v.emplace_back(static_cast<int>(blk.kind), blk.vars, blk.exps);
        return v;
    };
    return key(a) < key(b);
}

struct ExhaustiveSearch {
    const WeightSystem& ws;
    std::vector<SingularityDecomposition> found;

    // Fill exponents of one block, position by position, trying every value
    // in range and keeping those whose monomial condition holds verbatim.
    void fill_exponents(SingularityDecomposition& dec, std::size_t bi, std::size_t pos,
                        const std::vector<std::vector<int>>& segs,
                        const std::vector<BlockKind>& kinds) {
        if (bi == segs.size()) {
            SingularityDecomposition copy = dec;
            oracle_canonicalize(copy);
            found.push_back(std::move(copy));
            return;
        }
        const std::vector<int>& seg = segs[bi];
        if (pos == seg.size()) {
            if (kinds[bi] == BlockKind::Cycle &&
                seg.size() % 2 == 0) {
                bool odd_ones = true, even_ones = true;
                for (std::size_t q = 0; q < seg.size(); ++q) {
                    if (q % 2 == 0) odd_ones = odd_ones && dec.blocks[bi].exps[q] == 1;
                    else even_ones = even_ones && dec.blocks[bi].exps[q] == 1;
                }
                if (odd_ones || even_ones) return;
            }
            fill_exponents(dec, bi + 1, 0, segs, kinds);
            return;
        }
        std::int64_t lo = 1;
        if (kinds[bi] == BlockKind::BP) lo = 2;
        if (kinds[bi] == BlockKind::Chain && pos == 0) lo = 2;
        for (std::int64_t a = lo; a <= ws.degree; ++a) {
            std::int64_t deg = a * ws.weights[seg[pos]];
            if (kinds[bi] == BlockKind::Cycle)
                deg += ws.weights[seg[(pos + seg.size() - 1) % seg.size()]];
            else if (kinds[bi] == BlockKind::Chain && pos > 0)
                deg += ws.weights[seg[pos - 1]];
            if (deg != ws.degree) continue;
            dec.blocks[bi].exps[pos] = a;
            fill_exponents(dec, bi, pos + 1, segs, kinds);
        }
    }

    void try_structure(const std::vector<std::vector<int>>& segs,
                       const std::vector<BlockKind>& kinds) {
        SingularityDecomposition dec;
        for (std::size_t i = 0; i < segs.size(); ++i)
            dec.blocks.push_back(
                Block{kinds[i], segs[i], std::vector<std::int64_t>(segs[i].size(), 0)});
        fill_exponents(dec, 0, 0, segs, kinds);
    }

    void assign_kinds(const std::vector<std::vector<int>>& segs, std::size_t i,
                      std::vector<BlockKind>& kinds) {
        if (i == segs.size()) {
            try_structure(segs, kinds);
            return;
        }
        if (segs[i].size() == 1) {
            kinds[i] = BlockKind::BP;
            assign_kinds(segs, i + 1, kinds);
        } else {
            kinds[i] = BlockKind::Chain;
            assign_kinds(segs, i + 1, kinds);
            kinds[i] = BlockKind::Cycle;
            assign_kinds(segs, i + 1, kinds);
        }
    }

    void run() {
        std::size_t m = ws.var_count();
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            // every composition of the permutation into consecutive segments
            std::size_t cuts = m - 1;
            for (unsigned mask = 0; mask < (1u << cuts); ++mask) {
                std::vector<std::vector<int>> segs(1);
                for (std::size_t i = 0; i < m; ++i) {
                    segs.back().push_back(perm[i]);
                    if (i < cuts && (mask & (1u << i))) segs.emplace_back();
                }
                std::vector<BlockKind> kinds(segs.size());
                assign_kinds(segs, 0, kinds);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
};

}  // namespace

std::vector<SingularityDecomposition> exhaustive_decompose(const WeightSystem& ws) {
    if (ws.var_count() > 4 || ws.degree > 60)
        throw ScaleExceeded("exhaustive_decompose limited to m <= 4, d <= 60");
    ExhaustiveSearch s{ws};
    s.run();
    std::sort(s.found.begin(), s.found.end(), oracle_less);
    s.found.erase(std::unique(s.found.begin(), s.found.end()), s.found.end());
    return s.found;
}

}  // namespace linkhom
