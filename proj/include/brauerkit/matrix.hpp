#pragma once

// Dense exact matrices, Smith diagonalization with column-transform
// tracking, and invariant factors of ker/im quotients over Z and Z/m.
// The elimination runs in checked int64 first and falls back to
// arbitrary precision when an intermediate entry overflows.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "brauerkit/numeric.hpp"

namespace brauerkit {

struct OverflowSignal {};

template <class T>
struct NumOps {
    static T add(const T& a, const T& b) { return a + b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T neg(const T& a) { return -a; }
    static T quot(const T& a, const T& b) { return a / b; }
    static T rem(const T& a, const T& b) { return a % b; }
};

template <>
struct NumOps<long long> {
    static long long add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
        return r;
    }
    static long long sub(long long a, long long b) {
        long long r;
        if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
        return r;
    }
    static long long mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
        return r;
    }
    static long long neg(long long a) {
        if (a == std::numeric_limits<long long>::min()) throw OverflowSignal{};
        return -a;
    }
    static long long quot(long long a, long long b) { return a / b; }
    static long long rem(long long a, long long b) { return a % b; }
};

template <class T>
struct Mat {
    long long rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(long long r, long long c) : rows(r), cols(c), a(static_cast<size_t>(r * c), T(0)) {}

    T& at(long long r, long long c) { return a[static_cast<size_t>(r * cols + c)]; }
    const T& at(long long r, long long c) const { return a[static_cast<size_t>(r * cols + c)]; }

    static Mat identity(long long n) {
        Mat m(n, n);
        for (long long i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    Mat<T> times(const Mat<T>& o) const {
        if (cols != o.rows) throw InternalError("matrix product shape mismatch");
        Mat<T> r(rows, o.cols);
        for (long long i = 0; i < rows; ++i)
            for (long long k = 0; k < cols; ++k) {
                const T& x = at(i, k);
                if (x == T(0)) continue;
                for (long long j = 0; j < o.cols; ++j)
                    r.at(i, j) = NumOps<T>::add(r.at(i, j), NumOps<T>::mul(x, o.at(k, j)));
            }
        return r;
    }

    bool operator==(const Mat<T>& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline Mat<Integer> widen(const Mat<long long>& m) {
    Mat<Integer> r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i];
    return r;
}

namespace detail {

template <class T>
T abs_of(const T& x) {
    return x < T(0) ? NumOps<T>::neg(x) : x;
}

// Nearest-integer quotient: |a - q*b| <= |b|/2.
template <class T>
T round_quot(const T& a, const T& b) {
    T q = NumOps<T>::quot(a, b);
    T r = NumOps<T>::sub(a, NumOps<T>::mul(q, b));
    T ab = abs_of(b);
    T twice = NumOps<T>::mul(T(2), abs_of(r));
    if (twice > ab) {
        bool same_sign = (r < T(0)) == (b < T(0));
        q = same_sign ? NumOps<T>::add(q, T(1)) : NumOps<T>::sub(q, T(1));
    }
    return q;
}

// Smith diagonalization by unimodular row/column operations with minimal
// absolute pivoting. Column operations are mirrored into V (right factor)
// and Vinv (its inverse), when provided. No divisibility chain is enforced.
template <class T>
std::vector<T> smith_diagonalize(Mat<T>& A, Mat<T>* V, Mat<T>* Vinv) {
    const long long R = A.rows, C = A.cols;
    auto swap_rows = [&](long long i, long long j) {
        if (i == j) return;
        for (long long c = 0; c < C; ++c) std::swap(A.at(i, c), A.at(j, c));
    };
    auto swap_cols = [&](long long i, long long j) {
        if (i == j) return;
        for (long long r = 0; r < R; ++r) std::swap(A.at(r, i), A.at(r, j));
        if (V)
            for (long long r = 0; r < V->rows; ++r) std::swap(V->at(r, i), V->at(r, j));
        if (Vinv)
            for (long long c = 0; c < Vinv->cols; ++c) std::swap(Vinv->at(i, c), Vinv->at(j, c));
    };
    // row_i -= q * row_j
    auto row_sub = [&](long long i, long long j, const T& q, long long from_col) {
        for (long long c = from_col; c < C; ++c)
            A.at(i, c) = NumOps<T>::sub(A.at(i, c), NumOps<T>::mul(q, A.at(j, c)));
    };
    // col_i -= q * col_j  (V: same; Vinv: row_j += q * row_i)
    auto col_sub = [&](long long i, long long j, const T& q, long long from_row) {
        for (long long r = from_row; r < R; ++r)
            A.at(r, i) = NumOps<T>::sub(A.at(r, i), NumOps<T>::mul(q, A.at(r, j)));
        if (V)
            for (long long r = 0; r < V->rows; ++r)
                V->at(r, i) = NumOps<T>::sub(V->at(r, i), NumOps<T>::mul(q, V->at(r, j)));
        if (Vinv)
            for (long long c = 0; c < Vinv->cols; ++c)
                Vinv->at(j, c) = NumOps<T>::add(Vinv->at(j, c), NumOps<T>::mul(q, Vinv->at(i, c)));
    };

    const long long T_ = std::min(R, C);
    std::vector<T> diag;
    for (long long t = 0; t < T_; ++t) {
        for (;;) {
            // minimal nonzero entry of the trailing block
            long long bi = -1, bj = -1;
            for (long long i = t; i < R; ++i)
                for (long long j = t; j < C; ++j) {
                    const T& x = A.at(i, j);
                    if (x == T(0)) continue;
                    if (bi < 0 || abs_of(x) < abs_of(A.at(bi, bj))) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi < 0) {
                for (long long t2 = t; t2 < T_; ++t2) diag.push_back(T(0));
                return diag;
            }
            swap_rows(t, bi);
            swap_cols(t, bj);
            bool dirty = false;
            for (long long i = t + 1; i < R; ++i) {
                if (A.at(i, t) == T(0)) continue;
                T q = round_quot(A.at(i, t), A.at(t, t));
                if (q != T(0)) row_sub(i, t, q, t);
                if (A.at(i, t) != T(0)) dirty = true;
            }
            for (long long j = t + 1; j < C; ++j) {
                if (A.at(t, j) == T(0)) continue;
                T q = round_quot(A.at(t, j), A.at(t, t));
                if (q != T(0)) col_sub(j, t, q, 0);
                if (A.at(t, j) != T(0)) dirty = true;
            }
            if (!dirty) break;
        }
        diag.push_back(A.at(t, t));
    }
    return diag;
}

}  // namespace detail

struct AbelianInvariants {
    long long free_rank = 0;
    std::vector<Integer> torsion;  // d1 | d2 | ..., each >= 2

    bool operator==(const AbelianInvariants& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    Integer exponent() const { return torsion.empty() ? Integer(1) : torsion.back(); }
    Integer torsion_order() const {
        Integer n = 1;
        for (const auto& d : torsion) n *= d;
        return n;
    }
    std::string str() const {
        std::string s = "Z^" + std::to_string(free_rank);
        for (const auto& d : torsion) s += " + Z/" + d.str();
        return s;
    }
};

// Canonical invariant factors from an unordered diagonal.
inline std::vector<Integer> invariant_factor_chain(std::vector<Integer> ds) {
    std::vector<Integer> nz;
    for (auto& d : ds)
        if (d != 0) nz.push_back(abs_int(d));
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < nz.size(); ++i)
            for (size_t j = i + 1; j < nz.size(); ++j) {
                if (nz[j] % nz[i] == 0) continue;
                Integer g = gcd(nz[i], nz[j]);
                nz[j] = nz[i] / g * nz[j];
                nz[i] = g;
                changed = true;
            }
    }
    std::sort(nz.begin(), nz.end());
    std::vector<Integer> out;
    for (auto& d : nz)
        if (d > 1) out.push_back(d);
    return out;
}

namespace detail {

template <class T>
AbelianInvariants homology_core(Mat<T> A, const Mat<T>& B, const Integer& modulus) {
    const long long c = A.cols;
    if (B.rows != c && !(B.rows == 0 && B.cols == 0))
        throw InternalError("homology: B must map into the domain of A");
    Mat<T> Vinv = Mat<T>::identity(c);
    std::vector<T> diag = smith_diagonalize(A, static_cast<Mat<T>*>(nullptr), &Vinv);
    auto d_at = [&](long long j) -> Integer {
        if (j < static_cast<long long>(diag.size())) return Integer(diag[static_cast<size_t>(j)]);
        return Integer(0);
    };

    // coordinates of the denominator generators in the V-basis
    const long long cb = (B.rows == c) ? B.cols : 0;
    const bool mod = modulus != 0;
    const long long gens = cb + (mod ? c : 0);
    Mat<Integer> Z(c, gens);
    for (long long i = 0; i < c; ++i)
        for (long long j = 0; j < c; ++j) {
            Integer vij = Integer(Vinv.at(i, j));
            if (vij == 0) continue;
            for (long long g = 0; g < cb; ++g) Z.at(i, g) += vij * Integer(B.at(j, g));
            if (mod) Z.at(i, cb + j) += vij * modulus;
        }

    AbelianInvariants H;
    if (!mod) {
        // kernel basis: columns with zero diagonal
        std::vector<long long> ker;
        for (long long j = 0; j < c; ++j)
            if (d_at(j) == 0) ker.push_back(j);
        for (long long j = 0; j < c; ++j) {
            if (d_at(j) != 0) {
                for (long long g = 0; g < gens; ++g)
                    if (Z.at(j, g) != 0)
                        throw InternalError("homology: image not contained in kernel");
            }
        }
        Mat<Integer> X(static_cast<long long>(ker.size()), gens);
        for (size_t i = 0; i < ker.size(); ++i)
            for (long long g = 0; g < gens; ++g) X.at(static_cast<long long>(i), g) = Z.at(ker[i], g);
        auto xd = smith_diagonalize(X, static_cast<Mat<Integer>*>(nullptr),
                                    static_cast<Mat<Integer>*>(nullptr));
        long long rank = 0;
        for (auto& d : xd)
            if (d != 0) ++rank;
        H.free_rank = static_cast<long long>(ker.size()) - rank;
        H.torsion = invariant_factor_chain(xd);
        return H;
    }

    // Z/m coefficients: kernel lattice of (A mod m) has basis V*diag(s_j),
    // s_j = m/gcd(d_j, m); divide coordinates through by s_j.
    Mat<Integer> X(c, gens);
    for (long long j = 0; j < c; ++j) {
        Integer s = modulus / gcd(d_at(j), modulus);
        for (long long g = 0; g < gens; ++g) {
            if (Z.at(j, g) % s != 0)
                throw InternalError("homology: image not contained in mod-m kernel");
            X.at(j, g) = Z.at(j, g) / s;
        }
    }
    auto xd = smith_diagonalize(X, static_cast<Mat<Integer>*>(nullptr),
                                static_cast<Mat<Integer>*>(nullptr));
    long long rank = 0;
    for (auto& d : xd)
        if (d != 0) ++rank;
    H.free_rank = c - rank;
    H.torsion = invariant_factor_chain(xd);
    return H;
}

}  // namespace detail

// Invariant factors of ker(A)/im(B) over Z (modulus = 0) or over Z/m
// (modulus = m > 0, where the kernel is of A mod m and the image adds m*Z^c).
// Pass B with rows == 0 for a zero image.
inline AbelianInvariants homology_invariants(const Mat<long long>& A, const Mat<long long>& B,
                                             const Integer& modulus = 0) {
    try {
        return detail::homology_core<long long>(A, B, modulus);
    } catch (const OverflowSignal&) {
        return detail::homology_core<Integer>(widen(A), widen(B), modulus);
    }
}

inline AbelianInvariants cokernel_invariants(const Mat<long long>& B, const Integer& modulus = 0) {
    Mat<long long> A(0, B.rows);  // zero map: kernel is everything
    return homology_invariants(A, B, modulus);
}

}  // namespace brauerkit
