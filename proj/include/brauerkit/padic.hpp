#pragma once

// p-adic valuations, square testing in completions of Q, finite-precision
// p-adic approximations and quadratic-strength Hensel lifting.

#include <vector>

#include "brauerkit/factor.hpp"
#include "brauerkit/place.hpp"

namespace brauerkit {

// Additive valuation marker for 0.
inline constexpr long long kValuationInfinity = (1LL << 62);

inline long long padic_valuation(const Integer& n, const Integer& p) {
    if (n == 0) return kValuationInfinity;
    long long v = 0;
    Integer m = n;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

inline long long padic_valuation(const Rational& x, const Integer& p) {
    if (x == 0) return kValuationInfinity;
    return padic_valuation(num(x), p) - padic_valuation(den(x), p);
}

// Unit part of x at p reduced mod p^k: x = u * p^v, returns u mod p^k.
inline Integer padic_unit_mod(const Rational& x, const Integer& p, long long k) {
    if (x == 0) throw InternalError("padic_unit_mod(0)");
    Integer pk = pow(p, static_cast<unsigned>(k));
    Integer n = num(x), d = den(x);
    while (n % p == 0) n /= p;
    while (d % p == 0) d /= p;
    return mul_mod(mod_pos(n, pk), inv_mod(d, pk), pk);
}

// Squares in completions of Q. Real: positivity. Odd p: even valuation and
// residue a square mod p. p = 2: even valuation and unit part = 1 mod 8.
inline bool is_square_local(const Rational& x, const Place& v) {
    if (x == 0) throw InternalError("is_square_local(0)");
    if (v.is_real()) return x > 0;
    const Integer& p = v.prime();
    if (padic_valuation(x, p) % 2 != 0) return false;
    if (p == 2) return padic_unit_mod(x, 2, 3) == 1;
    return legendre_symbol(padic_unit_mod(x, p, 1), p) == 1;
}

// Value u * p^m known modulo p^(m+k); u coprime to p, 0 < u < p^k, k >= 1.
// The exact zero (infinite valuation) is a separate state.
class PAdic {
public:
    static PAdic zero(const Integer& p) {
        PAdic x;
        x.p_ = p;
        x.zero_ = true;
        return x;
    }
    static PAdic make(const Integer& p, long long val, const Integer& unit, long long prec) {
        if (prec < 1) throw InsufficientPrecision("precision must be >= 1");
        PAdic x;
        x.p_ = p;
        x.val_ = val;
        x.prec_ = prec;
        x.unit_ = mod_pos(unit, pow(p, static_cast<unsigned>(prec)));
        if (x.unit_ == 0 || x.unit_ % p == 0)
            throw InternalError("PAdic unit not a unit");
        return x;
    }
    // Embed an exact rational that is p-integral after valuation split.
    static PAdic from_rational(const Rational& x, const Integer& p, long long prec) {
        if (x == 0) return zero(p);
        return make(p, padic_valuation(x, p), padic_unit_mod(x, p, prec), prec);
    }

    const Integer& prime() const { return p_; }
    bool is_zero() const { return zero_; }
    long long valuation() const {
        if (zero_) throw InsufficientPrecision("valuation of exact zero");
        return val_;
    }
    const Integer& unit() const {
        if (zero_) throw InsufficientPrecision("unit of exact zero");
        return unit_;
    }
    long long precision() const { return prec_; }

    // Representative integer/rational u*p^m (truncation of the value).
    Rational approximant() const {
        if (zero_) return Rational(0);
        Rational r(unit_);
        if (val_ >= 0) return r * Rational(pow(p_, static_cast<unsigned>(val_)));
        return r / Rational(pow(p_, static_cast<unsigned>(-val_)));
    }

    PAdic mul(const PAdic& o) const {
        check_same(o);
        if (zero_ || o.zero_) return zero(p_);
        long long k = std::min(prec_, o.prec_);
        Integer pk = pow(p_, static_cast<unsigned>(k));
        return make(p_, val_ + o.val_, mul_mod(unit_, o.unit_, pk), k);
    }

    PAdic add(const PAdic& o) const {
        check_same(o);
        if (zero_) return o;
        if (o.zero_) return *this;
        const PAdic& lo = (val_ <= o.val_) ? *this : o;
        const PAdic& hi = (val_ <= o.val_) ? o : *this;
        long long shift = hi.val_ - lo.val_;
        // sum known modulo p^(lo.val + k) with k below
        long long k = std::min(lo.prec_, hi.prec_ + shift);
        Integer pk = pow(p_, static_cast<unsigned>(k));
        Integer u = lo.unit_ % pk;
        if (shift < k) u = mod_pos(u + hi.unit_ * pow(p_, static_cast<unsigned>(shift)), pk);
        if (u == 0)
            throw InsufficientPrecision("cancellation below stored precision in p-adic add");
        long long drop = padic_valuation(u, p_);
        if (drop >= k)
            throw InsufficientPrecision("cancellation below stored precision in p-adic add");
        Integer unit = u / pow(p_, static_cast<unsigned>(drop));
        return make(p_, lo.val_ + drop, unit, k - drop);
    }

    PAdic neg() const {
        if (zero_) return *this;
        Integer pk = pow(p_, static_cast<unsigned>(prec_));
        return make(p_, val_, pk - unit_, prec_);
    }

    std::string str() const {
        if (zero_) return "0";
        return unit_.str() + "*" + p_.str() + "^" + std::to_string(val_) +
               " + O(" + p_.str() + "^" + std::to_string(val_ + prec_) + ")";
    }

private:
    PAdic() = default;
    void check_same(const PAdic& o) const {
        if (p_ != o.p_) throw InternalError("mixed primes in p-adic arithmetic");
    }
    Integer p_ = 0;
    bool zero_ = false;
    long long val_ = 0;
    Integer unit_ = 0;
    long long prec_ = 0;
};

// ---- polynomials over Z (ascending coefficients) -------------------------

inline Integer poly_eval(const std::vector<Integer>& f, const Integer& x) {
    Integer acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline std::vector<Integer> poly_derivative(const std::vector<Integer>& f) {
    std::vector<Integer> d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(Integer(i) * f[i]);
    if (d.empty()) d.push_back(0);
    return d;
}

// Newton lifting under the strong Hensel condition v(f(a)) > 2 v(f'(a)).
// Returns a root approximation x with f(x) = 0 mod p^k and x = a mod
// p^(v(f'(a))+1), verified by exact substitution before returning.
inline PAdic hensel_lift(const std::vector<Integer>& f, const Integer& seed, const Integer& p,
                         long long k) {
    if (k < 1) throw HenselConditionFailed("target precision must be >= 1");
    std::vector<Integer> df = poly_derivative(f);
    Integer fa = poly_eval(f, seed);
    if (fa == 0) {
        // exact root; it is its own lift
        return (seed == 0) ? PAdic::zero(p) : PAdic::from_rational(Rational(seed), p, k);
    }
    Integer dfa = poly_eval(df, seed);
    long long t = (dfa == 0) ? kValuationInfinity : padic_valuation(dfa, p);
    long long s = padic_valuation(fa, p);
    if (t == kValuationInfinity || s <= 2 * t)
        throw HenselConditionFailed("v(f(a)) = " + std::to_string(s) + " not > 2*v(f'(a))");

    const long long K = k + 2 * t + 4;
    const Integer pK = pow(p, static_cast<unsigned>(K));
    Integer x = mod_pos(seed, pK);
    long long last = s;
    for (int iter = 0; iter < 200; ++iter) {
        Integer fx = mod_pos(poly_eval(f, x), pK);
        long long e = (fx == 0) ? K : padic_valuation(fx, p);
        if (e >= k) break;
        if (iter > 0 && e <= last)
            throw InternalError("hensel iteration stalled");
        last = e;
        Integer dfx = mod_pos(poly_eval(df, x), pK);
        if (padic_valuation(dfx, p) != t) throw InternalError("hensel derivative drift");
        Integer pt = pow(p, static_cast<unsigned>(t));
        Integer red = pow(p, static_cast<unsigned>(K - t));
        Integer step = mul_mod(fx / pt, inv_mod(dfx / pt, red), red);
        x = mod_pos(x - step * pt, pK);
    }
    // exact verification of the contract
    Integer pk = pow(p, static_cast<unsigned>(k));
    if (mod_pos(poly_eval(f, x), pk) != 0) throw InternalError("hensel lift failed verification");
    if (mod_pos(x - seed, pow(p, static_cast<unsigned>(t + 1))) != 0)
        throw InternalError("hensel lift left the uniqueness disc");
    if (x == 0) return PAdic::zero(p);
    long long xv = padic_valuation(x, p);
    if (xv + k > K) throw InternalError("hensel root valuation exhausts working precision");
    Integer unit = (x / pow(p, static_cast<unsigned>(xv))) % pk;
    return PAdic::make(p, xv, unit, k);
}

}  // namespace brauerkit
