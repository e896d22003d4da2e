#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "linkhom/numbers.hpp"

namespace linkhom {

// Element of the Milnor-Orlik divisor ring: a finite rational combination of
// the periods L_j = div(t^j - 1), multiplied via L_a * L_b = gcd(a,b) *
// L_{lcm(a,b)}. L_1 is the ring identity, so plain integers embed as
// multiples of L_1. Zero coefficients are pruned eagerly, making structural
// equality semantic equality.
class Divisor {
  public:
    Divisor() = default;

    static Divisor zero() { return Divisor{}; }
    static Divisor one() { return lambda(1); }

    static Divisor lambda(std::int64_t period) {
        Divisor d;
        d.set(period, Rat(1));
        return d;
    }

    static Divisor constant(const Rat& c) {
        Divisor d;
        d.set(1, c);
        return d;
    }

    const std::map<std::int64_t, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rat coeff(std::int64_t period) const {
        auto it = coeffs_.find(period);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    void set(std::int64_t period, const Rat& c);
    void add(std::int64_t period, const Rat& c);

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    Divisor& operator*=(const Rat& s);

    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(Divisor a, const Rat& s) { return a *= s; }

    // Bilinear extension of the L-relation.
    friend Divisor operator*(const Divisor& a, const Divisor& b);

    bool operator==(const Divisor& o) const { return coeffs_ == o.coeffs_; }

    bool is_integral() const;

    std::string to_string() const;

  private:
    std::map<std::int64_t, Rat> coeffs_;
};

// The factor L_u / v - 1 appearing in the divisor product of an Alexander
// polynomial.
Divisor factor_divisor(std::int64_t u, std::int64_t v);

// An integral divisor reinterpreted as a factored polynomial
// (t-1)^e1 * prod_{j>=2} (t^j-1)^{a_j}. Exponents may be negative as long as
// the product is a genuine polynomial.
struct ProductForm {
    std::map<std::int64_t, Int> a;  // period j >= 2 -> exponent a_j, no zeros
    Int e1 = 0;                     // exponent of (t - 1)

    bool operator==(const ProductForm& o) const { return e1 == o.e1 && a == o.a; }
};

// Throws NonIntegralDivisor if any coefficient is fractional.
ProductForm to_product_form(const Divisor& d);

// Inverse of to_product_form; round trip is the identity on integral divisors.
Divisor to_divisor(const ProductForm& p);

// Exact value at t0 in {+1, -1} via root-multiplicity bookkeeping, O(#periods)
// regardless of the polynomial degree. Throws PoleAtPoint if the multiplicity
// at t0 is negative.
Int eval_product_form(const ProductForm& p, int t0);

// Degree of the expanded polynomial: sum_j j*a_j + e1. Equals the Milnor
// number when the form comes from a link.
Int degree_of(const ProductForm& p);

std::string to_string(const ProductForm& p);

}  // namespace linkhom
