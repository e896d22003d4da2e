#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkhom/errors.hpp"

namespace linkhom {

// Exact arithmetic only. GMP supplies the representations; everything that
// touches them goes through these helpers so conventions (empty gcd/lcm,
// rational floor) live in one place.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// gcd over a possibly empty list; gcd() = 0 (the identity of gcd).
inline Int gcd_all(std::span<const Int> xs) {
    Int g = 0;
    for (const Int& x : xs) g = gcd(g, x);
    return g;
}

// lcm over a possibly empty list; lcm() = 1.
inline Int lcm_all(std::span<const Int> xs) {
    Int l = 1;
    for (const Int& x : xs) l = lcm(l, x);
    return l;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// mpq_class two-argument constructors do not canonicalize; always build
// rationals through this.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Exact floor of a rational (round toward -inf), needed because torsion
// ranks are decided by comparing k-values against integers.
inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::int64_t to_i64(const Int& x, const char* what) {
    if (!x.fits_slong_p())
        throw ScaleExceeded(std::string(what) + " does not fit in 64 bits: " + x.get_str());
    return static_cast<std::int64_t>(x.get_si());
}

inline unsigned long to_ulong_exponent(const Int& x, const char* what) {
    if (sgn(x) < 0 || !x.fits_ulong_p())
        throw ScaleExceeded(std::string(what) + " is not a representable exponent: " + x.get_str());
    return x.get_ui();
}

// Decimal rendering; all external numeric output goes through this (never
// scientific notation, values routinely exceed 2^64).
inline std::string to_decimal(const Int& x) { return x.get_str(); }

}  // namespace linkhom
