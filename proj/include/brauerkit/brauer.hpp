#pragma once

// Quaternion Brauer classes over Q: local invariant vectors, the product
// formula, the global splitting decision, Legendre's induction-on-M descent
// with a full trace, and explicit conic points.

#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "brauerkit/hilbert.hpp"

namespace brauerkit {

// Element of Q/Z as a reduced fraction in [0, 1).
struct QmodZ {
    Integer num = 0, den = 1;

    static QmodZ zero() { return {}; }
    static QmodZ half() { return {1, 2}; }
    static QmodZ of(const Integer& n, const Integer& d) {
        if (d <= 0) throw InternalError("QmodZ denominator must be positive");
        QmodZ q{mod_pos(n, d), d};
        Integer g = gcd(q.num, q.den);
        q.num /= g;
        q.den /= g;
        return q;
    }
    QmodZ operator+(const QmodZ& o) const { return of(num * o.den + o.num * den, den * o.den); }
    bool operator==(const QmodZ& o) const { return num == o.num && den == o.den; }
    bool is_zero() const { return num == 0; }
    std::string str() const { return num == 0 ? "0" : num.str() + "/" + den.str(); }
};

// Search budgets, overridable through BRAUERKIT_BUDGET (a height cap).
inline long long search_budget_cap() {
    if (const char* e = std::getenv("BRAUERKIT_BUDGET")) {
        long long v = std::atoll(e);
        if (v > 0) return v;
    }
    return 1 << 16;
}

struct QuaternionClass {
    Rational a, b;           // defining pair, nonzero
    Integer a_sf = 1, b_sf = 1;  // squarefree square-class representatives

    QuaternionClass(const Rational& a_, const Rational& b_) : a(a_), b(b_) {
        if (a == 0 || b == 0) throw InternalError("quaternion class needs nonzero a, b");
        a_sf = square_class(a);
        b_sf = square_class(b);
    }
};

// Finite support map Place -> Q/Z; absent places carry 0. Only nonzero
// entries are stored, in canonical order (real place first, then primes).
struct InvariantVector {
    std::vector<std::pair<Place, QmodZ>> entries;

    bool all_zero() const { return entries.empty(); }
    QmodZ sum() const {
        QmodZ s;
        for (const auto& [v, q] : entries) s = s + q;
        return s;
    }
    QmodZ at(const Place& v) const {
        for (const auto& [w, q] : entries)
            if (w == v) return q;
        return QmodZ::zero();
    }
    bool operator==(const InvariantVector& o) const { return entries == o.entries; }

    std::string str() const {
        std::string s = "{";
        for (size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ", ";
            s += entries[i].first.str() + ": " + entries[i].second.str();
        }
        return s + "}";
    }
};

// Support is contained in {real, 2} and the odd primes dividing the
// squarefree representatives; everywhere else both arguments are units and
// the tame symbol is trivial.
inline InvariantVector local_invariants(const QuaternionClass& c) {
    std::set<Integer> odd;
    for (const auto& [p, e] : factor(c.a_sf)) odd.insert(p);
    for (const auto& [p, e] : factor(c.b_sf)) odd.insert(p);
    odd.erase(2);
    InvariantVector iv;
    Rational ra(c.a_sf), rb(c.b_sf);
    if (hilbert_symbol(ra, rb, Place::real()) == -1)
        iv.entries.emplace_back(Place::real(), QmodZ::half());
    if (hilbert_symbol(ra, rb, Place::finite(2)) == -1)
        iv.entries.emplace_back(Place::finite(2), QmodZ::half());
    for (const Integer& p : odd)
        if (hilbert_symbol(ra, rb, Place::finite(p)) == -1)
            iv.entries.emplace_back(Place::finite(p), QmodZ::half());
    return iv;
}

inline bool product_formula_check(const QuaternionClass& c) {
    return local_invariants(c).sum().is_zero();
}

inline bool is_split(const QuaternionClass& c) { return local_invariants(c).all_zero(); }

// ---- explicit conic points -------------------------------------------------

// Primitive nonzero integer solution of u^2 - a v^2 - b w^2 = 0, by
// increasing max-norm of (v, w) up to the budget cap. Returns the witness,
// or nullopt with the obstructing place when the class is not split.
struct ConicPointResult {
    std::optional<std::array<Integer, 3>> point;
    std::optional<Place> obstruction;
};

namespace detail {

inline std::array<Integer, 3> primitive_triple(Integer u, Integer v, Integer w) {
    Integer g = gcd(gcd(abs_int(u), abs_int(v)), abs_int(w));
    if (g == 0) throw InternalError("zero conic point");
    return {u / g, v / g, w / g};
}

// search for the squarefree pair
inline std::optional<std::array<Integer, 3>> conic_search(const Integer& a, const Integer& b,
                                                          long long cap) {
    for (long long h = 1; h <= cap; ++h) {
        for (long long w = 0; w <= h; ++w) {
            for (long long v = 0; v <= h; ++v) {
                if (std::max(v, w) != h) continue;
                Integer t = a * v * v + b * w * w;
                if (t < 0) continue;
                if (auto u = exact_sqrt(t)) return primitive_triple(*u, v, w);
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline ConicPointResult conic_point(const Rational& a, const Rational& b) {
    QuaternionClass c(a, b);
    InvariantVector iv = local_invariants(c);
    if (!iv.all_zero()) return {std::nullopt, iv.entries.front().first};

    // scale back from the squarefree pair: a = a_sf * (fa/da)^2 etc.
    Integer na = num(a), da = den(a);
    Integer fa = squarefree_part(na * da).square_root;
    Integer nb = num(b), db = den(b);
    Integer fb = squarefree_part(nb * db).square_root;
    auto found = detail::conic_search(c.a_sf, c.b_sf, search_budget_cap());
    if (!found)
        throw SearchBudgetExceeded("class is split but no witness within the height budget");
    // (u, v, w) for (a_sf, b_sf) -> (u, v*da/fa, w*db/fb) rationally
    Integer u = (*found)[0] * fa * fb;
    Integer v = (*found)[1] * da * fb;
    Integer w = (*found)[2] * fa * db;
    auto pt = detail::primitive_triple(u, v, w);
    // exact verification
    Rational check = Rational(pt[0]) * pt[0] - a * Rational(pt[1]) * pt[1] -
                     b * Rational(pt[2]) * pt[2];
    if (check != 0) throw InternalError("conic point failed verification");
    return {pt, std::nullopt};
}

// ---- Legendre descent --------------------------------------------------------

struct DescentStep {
    Integer a, b, c, b_next;  // a = c^2 - b * b_next, |c| <= |b|/2
};

struct DescentTrace {
    std::vector<DescentStep> steps;
    bool split = false;
    std::optional<Place> obstruction;
};

namespace detail {

// smallest |c|, then positive, among c^2 = a (mod |b|), |c| <= |b|/2
inline Integer descent_sqrt(const Integer& a, const Integer& b) {
    Integer m = abs_int(b);
    std::vector<Integer> roots = sqrt_mod_squarefree(a, m);
    if (roots.empty()) throw InternalError("descent: a is not a square mod b");
    std::optional<Integer> best;
    for (const Integer& r0 : roots) {
        for (const Integer& c : {r0, r0 - m}) {
            if (2 * abs_int(c) > m) continue;
            if (!best || abs_int(c) < abs_int(*best) ||
                (abs_int(c) == abs_int(*best) && c > *best))
                best = c;
        }
    }
    if (!best) throw InternalError("descent: no reduced square root");
    return *best;
}

inline void descent_run(Integer a, Integer b, DescentTrace& trace) {
    for (;;) {
        if (abs_int(a) > abs_int(b)) std::swap(a, b);
        if (a == 1 || b == 1) return;  // split: one slot is a square
        if (a == -1 && b == -1)
            throw InternalError("descent reached (-1,-1) under a split certificate");
        Integer c = descent_sqrt(a, b);
        if ((c * c - a) % b != 0) throw InternalError("descent: c^2 - a not divisible by b");
        Integer b_next = (c * c - a) / b;
        if (b_next == 0) {
            // a = c^2 squarefree forces a = 1, already handled
            throw InternalError("descent: b' vanished for non-square a");
        }
        trace.steps.push_back({a, b, c, b_next});
        b = squarefree_part(b_next).squarefree;
    }
}

}  // namespace detail

// Runs the induction a = c^2 - b b' only when every local invariant
// vanishes; each step replaces (a,b) by (a,b') with the same class.
inline DescentTrace descent_split_trace(const Integer& a_in, const Integer& b_in) {
    Integer a = a_in, b = b_in;
    if (a == 0 || b == 0) throw InternalError("descent needs nonzero entries");
    if (squarefree_part(a).square_root != 1 || squarefree_part(b).square_root != 1)
        throw InternalError("descent needs squarefree entries");
    if (abs_int(a) > abs_int(b)) std::swap(a, b);
    DescentTrace trace;
    InvariantVector iv = local_invariants(QuaternionClass(Rational(a), Rational(b)));
    if (!iv.all_zero()) {
        trace.split = false;
        trace.obstruction = iv.entries.front().first;
        return trace;
    }
    detail::descent_run(a, b, trace);
    trace.split = true;
    return trace;
}

}  // namespace brauerkit
