#pragma once

// G-modules: integer matrix actions, optionally with coefficients Z/m,
// and the permutation-module constructor.

#include <vector>

#include "brauerkit/group.hpp"
#include "brauerkit/matrix.hpp"

namespace brauerkit {

struct GModule {
    int rank = 0;
    Integer modulus = 0;                // 0 means Z, m > 0 means Z/m
    std::vector<Mat<long long>> action; // one r x r matrix per group element
    std::string name;

    const Mat<long long>& rho(int g) const { return action[static_cast<size_t>(g)]; }

    // entries reduced to symmetric range mod m to keep elimination small
    void reduce() {
        if (modulus == 0) return;
        long long m = static_cast<long long>(modulus);
        for (auto& mat : action)
            for (auto& x : mat.a) {
                x %= m;
                if (2 * x > m) x -= m;
                if (2 * x < -m) x += m;
            }
    }

    void validate(const FiniteGroup& g) const {
        if (static_cast<int>(action.size()) != g.order)
            throw NotAnAction("one matrix per group element required");
        for (const auto& mat : action)
            if (mat.rows != rank || mat.cols != rank)
                throw NotAnAction("action matrix shape mismatch");
        auto eq_mod = [&](const Mat<long long>& x, const Mat<long long>& y) {
            if (modulus == 0) return x == y;
            long long m = static_cast<long long>(modulus);
            for (size_t i = 0; i < x.a.size(); ++i)
                if ((x.a[i] - y.a[i]) % m != 0) return false;
            return true;
        };
        if (!eq_mod(rho(g.identity), Mat<long long>::identity(rank)))
            throw NotAnAction("identity must act trivially");
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                if (!eq_mod(rho(a).times(rho(b)), rho(g.mul(a, b))))
                    throw NotAnAction("rho(g)rho(h) != rho(gh)");
    }
};

inline GModule trivial_module(const FiniteGroup& g, int rank = 1, const Integer& modulus = 0) {
    GModule m;
    m.rank = rank;
    m.modulus = modulus;
    m.name = modulus == 0 ? "Z^" + std::to_string(rank) : "(Z/" + modulus.str() + ")^" + std::to_string(rank);
    m.action.assign(g.order, Mat<long long>::identity(rank));
    return m;
}

// Z with a generator of Z/2 acting by -1 (usable for any group with a
// designated index-2 kernel is out of scope; this is the cyclic case).
inline GModule sign_module_cyclic(const FiniteGroup& g) {
    GModule m;
    m.rank = 1;
    m.modulus = 0;
    m.name = "Z(sign)";
    m.action.resize(g.order);
    for (int a = 0; a < g.order; ++a) {
        Mat<long long> s(1, 1);
        // parity of a in Z/n (n even): a acts by (-1)^a
        s.at(0, 0) = (a % 2 == 0) ? 1 : -1;
        m.action[a] = s;
    }
    return m;
}

// Z[G/H] with G permuting left cosets gH; basis indexed by the canonical
// coset representatives (minimal element index in each coset).
inline GModule permutation_module(const FiniteGroup& g, const std::vector<int>& subgroup) {
    if (!is_subgroup(g, subgroup)) throw NotASubgroup("given subset is not a subgroup");
    std::vector<int> coset_of(g.order, -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order; ++x) {
        if (coset_of[x] != -1) continue;
        int rep = static_cast<int>(reps.size());
        for (int h : subgroup) coset_of[g.mul(x, h)] = rep;
        reps.push_back(x);
    }
    const int r = static_cast<int>(reps.size());
    GModule m;
    m.rank = r;
    m.modulus = 0;
    m.name = "Z[" + g.name + "/H" + std::to_string(subgroup.size()) + "]";
    m.action.resize(g.order);
    for (int a = 0; a < g.order; ++a) {
        Mat<long long> p(r, r);
        for (int j = 0; j < r; ++j) p.at(coset_of[g.mul(a, reps[j])], j) = 1;
        m.action[a] = p;
    }
    return m;
}

inline GModule regular_representation(const FiniteGroup& g) {
    return permutation_module(g, {g.identity});
}

}  // namespace brauerkit
