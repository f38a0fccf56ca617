#pragma once

// H^i(G, M) via the inhomogeneous cochain complex
//
//   (d phi)(g_1,...,g_{i+1}) = g_1 phi(g_2,...,g_{i+1})
//        + sum_{j=1..i} (-1)^j phi(g_1,...,g_j g_{j+1},...,g_{i+1})
//        + (-1)^{i+1} phi(g_1,...,g_i),
//
// plus the closed-form fast path for cyclic groups and the commutator
// presentation of G^ab.

#include <string>
#include <vector>

#include "brauerkit/gmodule.hpp"

namespace brauerkit {

inline constexpr long long kCochainEntryCap = 2'000'000;   // entries of one cochain
inline constexpr long long kBoundaryEntryCap = 10'000'000; // entries of one boundary matrix

// tuples (g_1..g_i) indexed little-endian: index = sum g_k n^(k-1)
inline long long tuple_count(int n, int i) {
    long long t = 1;
    for (int k = 0; k < i; ++k) {
        t *= n;
        if (t > kCochainEntryCap) return t;  // caller checks the cap
    }
    return t;
}

// A degree-i cochain: one length-r vector per i-tuple of group elements.
struct Cochain {
    int degree = 0;
    long long tuples = 0;
    int rank = 0;
    std::vector<long long> values;  // tuples * rank, tuple-major

    long long& at(long long tuple, int k) { return values[static_cast<size_t>(tuple) * rank + k]; }
    long long at(long long tuple, int k) const {
        return values[static_cast<size_t>(tuple) * rank + k];
    }
};

// Matrix of d : C^i -> C^(i+1) in the tuple-major basis.
inline Mat<long long> boundary_matrix(const FiniteGroup& g, const GModule& m, int i) {
    if (i < 0) throw DimensionOverflow("negative degree");
    const int n = g.order;
    const int r = m.rank;
    const long long src = tuple_count(n, i) * r;
    const long long dst = tuple_count(n, i + 1) * r;
    if (dst > kCochainEntryCap)
        throw DimensionOverflow("cochain size " + std::to_string(dst) + " exceeds cap");
    if (dst * src > kBoundaryEntryCap)
        throw DimensionOverflow("boundary matrix exceeds entry cap");

    Mat<long long> d(dst, src);
    const long long src_tuples = src / r;
    std::vector<int> tup(static_cast<size_t>(i + 1));
    const long long dst_tuples = dst / r;
    for (long long row_t = 0; row_t < dst_tuples; ++row_t) {
        long long acc = row_t;
        for (int k = 0; k <= i; ++k) {
            tup[k] = static_cast<int>(acc % n);
            acc /= n;
        }
        // term 0: g_1 . phi(g_2..g_{i+1})
        long long t0 = 0;
        for (int k = i; k >= 1; --k) t0 = t0 * n + tup[k];
        const Mat<long long>& rho = m.rho(tup[0]);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                d.at(row_t * r + a, t0 * r + b) += rho.at(a, b);
        // terms j = 1..i: (-1)^j phi(.., g_j g_{j+1}, ..)
        for (int j = 1; j <= i; ++j) {
            long long tj = 0;
            for (int k = i; k >= 0; --k) {
                if (k == j - 1) continue;  // dropped slot
                int val = (k == j) ? g.mul(tup[j - 1], tup[j]) : tup[k];
                tj = tj * n + val;
            }
            int s = (j % 2 == 0) ? 1 : -1;
            for (int a = 0; a < r; ++a) d.at(row_t * r + a, tj * r + a) += s;
        }
        // last term: (-1)^{i+1} phi(g_1..g_i)
        long long tl = 0;
        for (int k = i - 1; k >= 0; --k) tl = tl * n + tup[k];
        int s = ((i + 1) % 2 == 0) ? 1 : -1;
        for (int a = 0; a < r; ++a) d.at(row_t * r + a, tl * r + a) += s;
    }
    (void)src_tuples;
    return d;
}

inline Cochain apply_boundary(const FiniteGroup& g, const GModule& m, const Cochain& phi) {
    Mat<long long> d = boundary_matrix(g, m, phi.degree);
    Cochain out;
    out.degree = phi.degree + 1;
    out.rank = phi.rank;
    out.tuples = d.rows / phi.rank;
    out.values.assign(static_cast<size_t>(d.rows), 0);
    for (long long i = 0; i < d.rows; ++i) {
        long long acc = 0;
        for (long long j = 0; j < d.cols; ++j) acc += d.at(i, j) * phi.values[static_cast<size_t>(j)];
        if (m.modulus != 0) {
            long long mm = static_cast<long long>(m.modulus);
            acc %= mm;
            if (acc < 0) acc += mm;
        }
        out.values[static_cast<size_t>(i)] = acc;
    }
    return out;
}

// ker d_i / im d_{i-1}; degree 0 gives the invariants of M^G.
inline AbelianInvariants cohomology(const FiniteGroup& g, const GModule& m, int i) {
    Mat<long long> di = boundary_matrix(g, m, i);
    Mat<long long> dprev(0, 0);
    if (i >= 1) dprev = boundary_matrix(g, m, i - 1);
    return homology_invariants(di, dprev, m.modulus);
}

// Cyclic fast path: for a generator s acting by s_action with s^n = 1,
//   H^0 = M^G, even i > 0: M^G / N(M), odd i: ker(N) / (s-1)M,
// with N = 1 + s + ... + s^{n-1}.
inline AbelianInvariants cyclic_cohomology(int n, const Mat<long long>& s_action,
                                           const Integer& modulus, int i) {
    const long long r = s_action.rows;
    if (s_action.cols != r) throw NotAnAction("action matrix must be square");
    auto reduce = [&](Mat<long long>& x) {
        if (modulus == 0) return;
        long long m = static_cast<long long>(modulus);
        for (auto& e : x.a) {
            e %= m;
            if (2 * e > m) e -= m;
            if (2 * e < -m) e += m;
        }
    };
    Mat<long long> id = Mat<long long>::identity(r);
    Mat<long long> pw = id, norm(r, r);
    for (int k = 0; k < n; ++k) {
        for (size_t t = 0; t < norm.a.size(); ++t) norm.a[t] += pw.a[t];
        pw = pw.times(s_action);
        reduce(pw);
        reduce(norm);
    }
    auto eq_zero_mod = [&](const Mat<long long>& x) {
        for (size_t t = 0; t < x.a.size(); ++t) {
            long long diff = x.a[t] - id.a[t];
            if (modulus == 0 ? diff != 0 : Integer(diff) % modulus != 0) return false;
        }
        return true;
    };
    if (!eq_zero_mod(pw)) throw NotAnAction("s_action^n is not the identity");

    Mat<long long> smi = s_action;  // s - 1
    for (long long k = 0; k < r; ++k) smi.at(k, k) -= 1;
    reduce(smi);
    if (i == 0) return homology_invariants(smi, Mat<long long>(0, 0), modulus);
    if (i % 2 == 0) return homology_invariants(smi, norm, modulus);
    return homology_invariants(norm, smi, modulus);
}

// Invariants of G/[G,G] from the relation lattice e_g + e_h - e_{gh}.
inline AbelianInvariants abelianization(const FiniteGroup& g) {
    const int n = g.order;
    Mat<long long> rel(n, static_cast<long long>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            long long col = static_cast<long long>(a) * n + b;
            rel.at(a, col) += 1;
            rel.at(b, col) += 1;
            rel.at(g.mul(a, b), col) -= 1;
        }
    return cokernel_invariants(rel);
}

}  // namespace brauerkit
