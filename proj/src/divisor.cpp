#include "linkhom/divisor.hpp"

#include <sstream>

#include "linkhom/errors.hpp"

namespace linkhom {

void Divisor::set(std::int64_t period, const Rat& c) {
    if (period < 1) throw Error("divisor period must be >= 1");
    if (c == 0)
        coeffs_.erase(period);
    else
        coeffs_[period] = c;
}

void Divisor::add(std::int64_t period, const Rat& c) {
    if (period < 1) throw Error("divisor period must be >= 1");
    auto it = coeffs_.find(period);
    if (it == coeffs_.end()) {
        if (c != 0) coeffs_.emplace(period, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [j, c] : o.coeffs_) add(j, c);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (const auto& [j, c] : o.coeffs_) add(j, -c);
    return *this;
}

Divisor& Divisor::operator*=(const Rat& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [j, c] : coeffs_) c *= s;
    return *this;
}

Divisor operator*(const Divisor& a, const Divisor& b) {
    Divisor r;
    for (const auto& [pa, ca] : a.coeffs_) {
        for (const auto& [pb, cb] : b.coeffs_) {
            std::int64_t g = gcd_i64(pa, pb);
            Int l = Int(pa) / g * Int(pb);
            r.add(to_i64(l, "lcm of periods"), ca * cb * g);
        }
    }
    return r;
}

bool Divisor::is_integral() const {
    for (const auto& [j, c] : coeffs_)
        if (!linkhom::is_integral(c)) return false;
    return true;
}

std::string Divisor::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, c] : coeffs_) {
        Rat a = c;
        if (!first) {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1 || a == -1);
        if (!unit || j == 1) os << a.get_str();
        else if (a == -1) os << '-';
        if (j >= 2) {
            if (!unit) os << '*';
            os << "L" << j;
        }
    }
    return os.str();
}

Divisor factor_divisor(std::int64_t u, std::int64_t v) {
    if (u < 1 || v < 1) throw Error("factor_divisor requires u, v >= 1");
    Divisor d;
    d.add(u, make_rat(Int(1), Int(v)));
    d.add(1, Rat(-1));
    return d;
}

ProductForm to_product_form(const Divisor& d) {
    ProductForm p;
    for (const auto& [j, c] : d.coeffs()) {
        if (!is_integral(c))
            throw NonIntegralDivisor("coefficient of L" + std::to_string(j) +
                                     " is not an integer: " + c.get_str());
        if (j == 1)
            p.e1 = c.get_num();
        else
            p.a[j] = c.get_num();
    }
    return p;
}

Divisor to_divisor(const ProductForm& p) {
    Divisor d;
    if (p.e1 != 0) d.set(1, Rat(p.e1));
    for (const auto& [j, aj] : p.a)
        if (aj != 0) d.set(j, Rat(aj));
    return d;
}

Int eval_product_form(const ProductForm& p, int t0) {
    if (t0 != 1 && t0 != -1) throw Error("eval_product_form only supports t0 = +1 or -1");

    if (t0 == 1) {
        // Multiplicity of the root t=1: every factor contributes once.
        Int m1 = p.e1;
        for (const auto& [j, aj] : p.a) m1 += aj;
        if (sgn(m1) > 0) return 0;
        if (sgn(m1) < 0)
            throw PoleAtPoint("negative multiplicity " + m1.get_str() + " at t=1");
        // Cofactor of (t-1) inside t^j-1 evaluates to j at t=1.
        Rat value(1);
        for (const auto& [j, aj] : p.a) {
            Int pw = pow_int(Int(j), to_ulong_exponent(abs(aj), "|a_j|"));
            if (sgn(aj) >= 0)
                value *= Rat(pw);
            else
                value /= Rat(pw);
        }
        if (!is_integral(value))
            throw NonIntegralDivisor("non-integral value at t=1: " + value.get_str());
        return value.get_num();
    }

    // t0 == -1: only even j factors vanish there.
    Int mm1 = 0;
    for (const auto& [j, aj] : p.a)
        if (j % 2 == 0) mm1 += aj;
    if (sgn(mm1) > 0) return 0;
    if (sgn(mm1) < 0)
        throw PoleAtPoint("negative multiplicity " + mm1.get_str() + " at t=-1");

    // (t-1) and odd-j factors evaluate to -2; even-j factors leave cofactor -j.
    Rat value(1);
    Int two_exp = p.e1;
    for (const auto& [j, aj] : p.a)
        if (j % 2 != 0) two_exp += aj;
    {
        Int pw = pow_int(Int(-2), to_ulong_exponent(abs(two_exp), "|e1 + sum odd a_j|"));
        if (sgn(two_exp) >= 0)
            value *= Rat(pw);
        else
            value /= Rat(pw);
    }
    for (const auto& [j, aj] : p.a) {
        if (j % 2 != 0) continue;
        Int pw = pow_int(Int(-j), to_ulong_exponent(abs(aj), "|a_j|"));
        if (sgn(aj) >= 0)
            value *= Rat(pw);
        else
            value /= Rat(pw);
    }
    if (!is_integral(value))
        throw NonIntegralDivisor("non-integral value at t=-1: " + value.get_str());
    return value.get_num();
}

Int degree_of(const ProductForm& p) {
    Int deg = p.e1;
    for (const auto& [j, aj] : p.a) deg += Int(j) * aj;
    return deg;
}

std::string to_string(const ProductForm& p) {
    std::ostringstream os;
    os << "(t-1)^" << p.e1.get_str();
    for (const auto& [j, aj] : p.a)
        os << " (t^" << j << "-1)^" << aj.get_str();
    return os.str();
}

}  // namespace linkhom
