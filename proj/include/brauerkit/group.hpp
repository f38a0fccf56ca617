#pragma once

// Finite groups as multiplication tables, closure of permutation
// generators, and subgroup enumeration for small orders.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "brauerkit/errors.hpp"

namespace brauerkit {

inline constexpr int kClosureOrderCap = 10'000;

struct FiniteGroup {
    int order = 0;
    std::vector<int> table;  // row g, column h -> index of g*h
    int identity = 0;
    std::vector<int> inverses;
    std::string name;
    // when built from permutation generators: element index -> word in
    // generator indices (empty word = identity)
    std::vector<std::vector<int>> words;

    int mul(int g, int h) const { return table[static_cast<size_t>(g) * order + h]; }
    int inv(int g) const { return inverses[static_cast<size_t>(g)]; }

    int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1

    // Exhaustive for order <= 64 (the library's corpus); throws otherwise
    // only if a violation is found on the sampled triples.
    void validate() const {
        if (order <= 0 || static_cast<int>(table.size()) != order * order)
            throw ParseError("group table has wrong shape");
        for (int x : table)
            if (x < 0 || x >= order) throw ParseError("group table entry out of range");
        for (int g = 0; g < order; ++g) {
            if (mul(identity, g) != g || mul(g, identity) != g)
                throw ParseError("identity axiom fails");
            if (mul(g, inv(g)) != identity || mul(inv(g), g) != identity)
                throw ParseError("inverse axiom fails");
        }
        if (order <= 64) {
            for (int a = 0; a < order; ++a)
                for (int b = 0; b < order; ++b)
                    for (int c = 0; c < order; ++c)
                        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                            throw ParseError("associativity fails");
        } else {
            for (int s = 0; s < 64 * 64; ++s) {
                int a = (s * 2654435761u) % order;
                int b = (s * 40503u + 7) % order;
                int c = (s * 69069u + 13) % order;
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw ParseError("associativity fails");
            }
        }
    }
};

// ---- builders -------------------------------------------------------------

inline FiniteGroup cyclic_group(int n) {
    FiniteGroup g;
    g.order = n;
    g.name = "Z/" + std::to_string(n);
    g.table.resize(static_cast<size_t>(n) * n);
    g.inverses.resize(n);
    for (int a = 0; a < n; ++a) {
        g.inverses[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) g.table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
    g.validate();
    return g;
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.order = a.order * b.order;
    g.name = a.name + "x" + b.name;
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    g.inverses.resize(g.order);
    auto idx = [&](int x, int y) { return x * b.order + y; };
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1) {
            g.inverses[idx(x1, y1)] = idx(a.inv(x1), b.inv(y1));
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    g.table[static_cast<size_t>(idx(x1, y1)) * g.order + idx(x2, y2)] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
        }
    g.identity = idx(a.identity, b.identity);
    g.validate();
    return g;
}

// Closure of permutations of {0..d-1} under composition; element 0 is the
// identity, discovery order is deterministic (BFS, generators in the given
// order). Each element records a defining word in the generators.
inline FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens,
                                           const std::string& name = "perm-group",
                                           int order_cap = kClosureOrderCap) {
    if (gens.empty()) throw ParseError("no generators");
    const size_t d = gens[0].size();
    for (const auto& p : gens) {
        if (p.size() != d) throw ParseError("generators act on different sets");
        std::vector<char> seen(d, 0);
        for (int x : p) {
            if (x < 0 || x >= static_cast<int>(d) || seen[x])
                throw ParseError("not a permutation");
            seen[x] = 1;
        }
    }
    std::vector<int> id(d);
    for (size_t i = 0; i < d; ++i) id[i] = static_cast<int>(i);
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    std::vector<std::vector<int>> words{{}};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            std::vector<int> prod(d);
            for (size_t i = 0; i < d; ++i) prod[i] = elems[head][gens[gi][i]];  // elem ∘ gen
            if (index.emplace(prod, static_cast<int>(elems.size())).second) {
                elems.push_back(prod);
                auto w = words[head];
                w.push_back(static_cast<int>(gi));
                words.push_back(std::move(w));
                if (static_cast<int>(elems.size()) > order_cap)
                    throw DimensionOverflow("permutation closure exceeds order cap");
            }
        }
    }
    FiniteGroup g;
    g.order = static_cast<int>(elems.size());
    g.name = name;
    g.words = std::move(words);
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    g.inverses.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            std::vector<int> prod(d);
            for (size_t i = 0; i < d; ++i) prod[i] = elems[x][elems[y][i]];
            int z = index.at(prod);
            g.table[static_cast<size_t>(x) * g.order + y] = z;
            if (z == 0) g.inverses[x] = y;
        }
    g.identity = 0;
    g.validate();
    return g;
}

inline FiniteGroup symmetric3() {
    return group_from_permutations({{1, 0, 2}, {1, 2, 0}}, "S3");
}
inline FiniteGroup alternating4() {
    return group_from_permutations({{1, 0, 3, 2}, {0, 2, 3, 1}}, "A4");
}
inline FiniteGroup dihedral4() {
    // symmetries of the square: rotation + reflection
    return group_from_permutations({{1, 2, 3, 0}, {1, 0, 3, 2}}, "D4");
}
inline FiniteGroup quaternion8() {
    // regular action of Q8 = {1,-1,i,-i,j,-j,k,-k} on itself by i and j
    // ordering: 1,-1,i,-i,j,-j,k,-k
    std::vector<int> left_i = {2, 3, 1, 0, 6, 7, 5, 4};  // i*x
    std::vector<int> left_j = {4, 5, 7, 6, 1, 0, 2, 3};  // j*x
    return group_from_permutations({left_i, left_j}, "Q8");
}
inline FiniteGroup klein4() { return direct_product(cyclic_group(2), cyclic_group(2)); }

// ---- subgroups -------------------------------------------------------------

// Closure of a subset; empty optional if it exceeds the whole group (cannot
// happen) -- kept total for reuse.
inline std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
    std::set<int> s(seed.begin(), seed.end());
    s.insert(g.identity);
    std::vector<int> queue(s.begin(), s.end());
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        std::vector<int> cand;
        cand.push_back(g.inv(x));
        for (int y : s) {
            cand.push_back(g.mul(x, y));
            cand.push_back(g.mul(y, x));
        }
        for (int z : cand)
            if (s.insert(z).second) queue.push_back(z);
    }
    return {s.begin(), s.end()};
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
    std::set<int> s(h.begin(), h.end());
    if (!s.count(g.identity)) return false;
    for (int x : s) {
        if (x < 0 || x >= g.order) return false;
        if (!s.count(g.inv(x))) return false;
        for (int y : s)
            if (!s.count(g.mul(x, y))) return false;
    }
    return true;
}

// All subgroups, as sorted element lists. Subsets of <= 3 generators suffice
// for every group of order <= 24 (each subgroup there is 2-generated except
// elementary abelian ranks <= 3).
inline std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
    if (g.order > 24) throw DimensionOverflow("subgroup enumeration capped at order 24");
    std::set<std::vector<int>> out;
    out.insert({g.identity});
    for (int a = 0; a < g.order; ++a) {
        out.insert(subgroup_closure(g, {a}));
        for (int b = a; b < g.order; ++b) {
            out.insert(subgroup_closure(g, {a, b}));
            for (int c = b; c < g.order; ++c) out.insert(subgroup_closure(g, {a, b, c}));
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace brauerkit
