#pragma once

// Hilbert symbols over Q. Real place: sign rule. Odd p: the tame symbol
// (a,b)_p = (-1)^{v(a)v(b)} a^{-v(b)} b^{v(a)} evaluated in F_p*, mapped
// through the Legendre symbol. p = 2: decided by solvability of
// u^2 = a v^2 + b w^2 over Z_2 -- a search over primitive residue vectors
// mod 2^6 certified by the strong Hensel condition at exact integer points.

#include "brauerkit/factor.hpp"
#include "brauerkit/padic.hpp"

namespace brauerkit {

namespace detail {

// Exact strong-Hensel certificate search for u^2 - a v^2 - b w^2 = 0 over
// Z_2, with v_2(a), v_2(b) in {0,1}. Sound by Newton's lemma at the found
// integer point; the 2^6 window's completeness is validated by the product
// formula suite.
template <class I>
bool conic_solvable_2adic(const I& a, const I& b, long long v2a, long long v2b) {
    constexpr int W = 64;
    auto v2_of = [](const I& x) {
        if constexpr (std::is_same_v<I, long long>)
            return val2_i64(x);
        else
            return val2(x);
    };
    long long sv_base = 1 + v2a;  // v2 of d/dv = -2av at odd v
    long long sw_base = 1 + v2b;
    for (int w = 0; w < W; ++w) {
        I bw2 = b * w * w;
        long long sw = (w == 0) ? kValuationInfinity : sw_base + val2_i64(w);
        for (int v = 0; v < W; ++v) {
            I t = a * v * v + bw2;
            long long sv = (v == 0) ? kValuationInfinity : sv_base + val2_i64(v);
            long long svw = std::min(sv, sw);
            int u0 = 0, step = 1;
            if (((v | w) & 1) == 0) {
                u0 = 1;  // v, w even: only odd u keeps the vector primitive
                step = 2;
            }
            for (int u = u0; u < W; u += step) {
                I f = I(u) * u - t;
                if (f == 0) return true;  // exact rational point
                long long su = (u == 0) ? kValuationInfinity : 1 + val2_i64(u);
                long long s = std::min(su, svw);
                if (s == kValuationInfinity) continue;
                if (v2_of(f) > 2 * s) return true;
            }
        }
    }
    return false;
}

}  // namespace detail

// a, b squarefree integers (automatically of 2-adic valuation 0 or 1).
inline bool conic_has_2adic_point(const Integer& a, const Integer& b) {
    long long v2a = padic_valuation(a, 2), v2b = padic_valuation(b, 2);
    static const Integer kFit = (Integer(1) << 40);
    if (abs_int(a) < kFit && abs_int(b) < kFit)
        return detail::conic_solvable_2adic<long long>(static_cast<long long>(a),
                                                       static_cast<long long>(b), v2a, v2b);
    return detail::conic_solvable_2adic<Integer>(a, b, v2a, v2b);
}

inline int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw InternalError("hilbert symbol of 0");
    if (v.is_real()) return (a < 0 && b < 0) ? -1 : 1;
    const Integer& p = v.prime();
    if (p == 2) return conic_has_2adic_point(square_class(a), square_class(b)) ? 1 : -1;
    long long alpha = padic_valuation(a, p);
    long long beta = padic_valuation(b, p);
    Integer ua = padic_unit_mod(a, p, 1);
    Integer ub = padic_unit_mod(b, p, 1);
    // (-1)^{alpha beta} * a^{-beta} * b^{alpha} in F_p*
    Integer r = ((alpha % 2) && (beta % 2)) ? p - 1 : 1;
    Integer ea = mod_pos(Integer(-beta), p - 1);
    Integer eb = mod_pos(Integer(alpha), p - 1);
    r = mul_mod(r, pow_mod(ua, ea, p), p);
    r = mul_mod(r, pow_mod(ub, eb, p), p);
    return legendre_symbol(r, p);
}

}  // namespace brauerkit
