#pragma once

// Exact integer/rational substrate. Everything downstream works over these
// types; no floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brauerkit/errors.hpp"

namespace brauerkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Integer& n) { return n.sign(); }
inline Integer abs_int(const Integer& n) { return boost::multiprecision::abs(n); }

inline std::string to_string(const Integer& n) { return n.str(); }
inline std::string to_string(const Rational& r) {
    return den(r) == 1 ? num(r).str() : num(r).str() + "/" + den(r).str();
}

// Accepts "n" or "p/q", optional leading minus on either part.
inline Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw ParseError("not a rational: \"" + s + "\"");
    }
}

inline Integer parse_integer(const std::string& s) {
    try {
        return Integer(s);
    } catch (const std::exception&) {
        throw ParseError("not an integer: \"" + s + "\"");
    }
}

// ---- modular arithmetic -------------------------------------------------

// Least nonnegative residue.
inline Integer mod_pos(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += abs_int(m);
    return r;
}

inline Integer mul_mod(const Integer& a, const Integer& b, const Integer& m) {
    return mod_pos(a * b, m);
}

inline Integer pow_mod(Integer base, Integer exp, const Integer& m) {
    if (m == 1) return 0;
    base = mod_pos(base, m);
    Integer acc = 1;
    while (exp > 0) {
        if (bit_test(exp, 0)) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// gcd(a,b) = a*x + b*y
inline Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return abs_int(a);
    }
    Integer x1, y1;
    Integer g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline Integer inv_mod(const Integer& a, const Integer& m) {
    Integer x, y;
    Integer g = ext_gcd(mod_pos(a, m), m, x, y);
    if (g != 1) throw InternalError("inverse of noninvertible residue mod " + m.str());
    return mod_pos(x, m);
}

// ---- primality ----------------------------------------------------------

inline bool miller_rabin_witness(const Integer& n, const Integer& a) {
    if (a % n == 0) return false;
    Integer d = n - 1;
    unsigned long r = 0;
    while (!bit_test(d, 0)) {
        d >>= 1;
        ++r;
    }
    Integer x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 0; i + 1 < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

// Deterministic for n < 3.3e24 via the fixed base set; the library's primes
// come from trial-division cofactors bounded by bound^2, far below that.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, a)) return false;
    }
    return true;
}

// ---- integer square roots ----------------------------------------------

inline Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

inline std::optional<Integer> exact_sqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

inline bool is_perfect_square(const Integer& n) { return exact_sqrt(n).has_value(); }

// Rational square test: reduced p/q is a square iff p >= 0 and both parts are.
inline bool is_rational_square(const Rational& r) {
    return r >= 0 && is_perfect_square(num(r)) && is_perfect_square(den(r));
}

// 2-adic valuation of a nonzero integer.
inline long long val2(const Integer& n) {
    if (n == 0) throw InternalError("val2(0)");
    return static_cast<long long>(lsb(abs_int(n)));
}

inline long long val2_i64(long long n) {
    if (n == 0) throw InternalError("val2(0)");
    unsigned long long u = (n < 0) ? -static_cast<unsigned long long>(n) : n;
    return __builtin_ctzll(u);
}

}  // namespace brauerkit
