#pragma once

// Trial-division factorization with an explicit bound, squarefree parts,
// Legendre symbols and modular square roots. No general factoring engine:
// an unfactored cofactor that is not prime is rejected loudly.

#include <map>
#include <vector>

#include "brauerkit/numeric.hpp"

namespace brauerkit {

inline constexpr long long kDefaultFactorBound = 1'000'000;

// prime -> exponent, for |n|; sign handled by callers.
inline std::map<Integer, long long> factor(Integer n, long long bound = kDefaultFactorBound) {
    if (n == 0) throw InternalError("factor(0)");
    n = abs_int(n);
    std::map<Integer, long long> out;
    auto strip = [&](const Integer& p) {
        long long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out[p] = e;
    };
    strip(2);
    strip(3);
    for (Integer d = 5; d <= bound && d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) {
        if (!is_prime(n))
            throw FactorizationBoundExceeded("cofactor " + n.str() +
                                             " exceeds trial-division bound and is not prime");
        out[n] += 1;
    }
    return out;
}

struct SquarefreeDecomposition {
    Integer squarefree;  // s, sign(s) = sign(n)
    Integer square_root; // f > 0, n = s * f^2
};

inline SquarefreeDecomposition squarefree_part(const Integer& n,
                                               long long bound = kDefaultFactorBound) {
    if (n == 0) throw InternalError("squarefree_part(0)");
    SquarefreeDecomposition d{(n < 0) ? Integer(-1) : Integer(1), 1};
    for (const auto& [p, e] : factor(n, bound)) {
        if (e % 2) d.squarefree *= p;
        for (long long i = 0; i < e / 2; ++i) d.square_root *= p;
    }
    return d;
}

// Square class of a nonzero rational as a squarefree integer: p/q ~ p*q.
inline Integer square_class(const Rational& r, long long bound = kDefaultFactorBound) {
    if (r == 0) throw InternalError("square_class(0)");
    return squarefree_part(num(r) * den(r), bound).squarefree;
}

// a^((p-1)/2) mod p, mapped to {-1, 0, +1}.
inline int legendre_symbol(const Integer& a, const Integer& p) {
    Integer r = pow_mod(mod_pos(a, p), (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

// Square root of a mod odd prime p (Tonelli--Shanks); nullopt if nonresidue.
inline std::optional<Integer> sqrt_mod_prime(const Integer& a0, const Integer& p) {
    Integer a = mod_pos(a0, p);
    if (a == 0) return Integer(0);
    if (p == 2) return a;  // 0^2=0, 1^2=1
    if (legendre_symbol(a, p) != 1) return std::nullopt;
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    // p = 1 mod 4: full Tonelli--Shanks
    Integer q = p - 1;
    unsigned long s = 0;
    while (!bit_test(q, 0)) {
        q >>= 1;
        ++s;
    }
    Integer z = 2;
    while (legendre_symbol(z, p) != -1) ++z;
    unsigned long m = s;
    Integer c = pow_mod(z, q, p);
    Integer t = pow_mod(a, q, p);
    Integer r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        Integer t2 = t;
        unsigned long i = 0;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, p);
            ++i;
            if (i == m) throw InternalError("tonelli-shanks failed");
        }
        Integer b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

// All square roots of a modulo a squarefree modulus b > 0, by CRT over the
// prime factors. Empty when none exist.
inline std::vector<Integer> sqrt_mod_squarefree(const Integer& a, const Integer& b,
                                                long long bound = kDefaultFactorBound) {
    if (b <= 0) throw InternalError("sqrt_mod_squarefree: modulus must be positive");
    std::vector<Integer> roots{0};
    Integer modulus = 1;
    if (b == 1) return roots;
    for (const auto& [p, e] : factor(b, bound)) {
        if (e != 1) throw InternalError("sqrt_mod_squarefree: modulus not squarefree");
        auto rp = sqrt_mod_prime(a, p);
        if (!rp) return {};
        std::vector<Integer> next;
        std::vector<Integer> local{*rp};
        if (*rp != 0 && mod_pos(-*rp, p) != *rp) local.push_back(mod_pos(-*rp, p));
        // CRT merge
        Integer inv_m = inv_mod(modulus % p, p);
        for (const Integer& r : roots) {
            for (const Integer& lp : local) {
                Integer k = mul_mod(lp - r, inv_m, p);
                next.push_back(r + modulus * k);
            }
        }
        roots = std::move(next);
        modulus *= p;
    }
    return roots;
}

}  // namespace brauerkit
