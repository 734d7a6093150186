#pragma once

// Shared hand-built algebras and independent oracle helpers for the tests.
// The oracles here recompute meets/joins/axioms by direct scans so they stay
// independent of the library's memoized operation tables and generators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "olkit/bitset.hpp"
#include "olkit/ortholattice.hpp"

namespace fixtures {

using olkit::Bitset;
using olkit::OLPtr;
using olkit::Ortholattice;

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline OLPtr make(std::vector<std::string> elements, const Pairs& covers, const Pairs& ortho) {
    return std::make_shared<Ortholattice>(std::move(elements), covers, ortho);
}

inline OLPtr c2() {
    return make({"0", "1"}, {{"0", "1"}}, {{"0", "1"}, {"1", "0"}});
}

inline OLPtr b4() {
    return make({"0", "a", "a'", "1"},
                {{"0", "a"}, {"0", "a'"}, {"a", "1"}, {"a'", "1"}},
                {{"0", "1"}, {"1", "0"}, {"a", "a'"}, {"a'", "a"}});
}

// benzene ring: 0 < a < b' < 1 and 0 < b < a' < 1
inline OLPtr o6() {
    return make({"0", "a", "b", "a'", "b'", "1"},
                {{"0", "a"}, {"0", "b"}, {"a", "b'"}, {"b", "a'"}, {"a'", "1"}, {"b'", "1"}},
                {{"0", "1"}, {"1", "0"}, {"a", "a'"}, {"a'", "a"}, {"b", "b'"}, {"b'", "b"}});
}

// MO_k: 2k incomparable atoms in complementary pairs
inline OLPtr mo(int k) {
    std::vector<std::string> els{"0"};
    Pairs covers, ortho{{"0", "1"}, {"1", "0"}};
    for (int i = 1; i <= k; ++i) {
        std::string p = "p" + std::to_string(i), q = p + "'";
        els.push_back(p);
        els.push_back(q);
        covers.push_back({"0", p});
        covers.push_back({"0", q});
        covers.push_back({p, "1"});
        covers.push_back({q, "1"});
        ortho.push_back({p, q});
        ortho.push_back({q, p});
    }
    els.push_back("1");
    return make(std::move(els), covers, ortho);
}

inline OLPtr mo2() { return mo(2); }

// --- quantifier helpers ------------------------------------------------

inline std::vector<int> identity_map(const Ortholattice& L) {
    std::vector<int> m(L.size());
    for (int i = 0; i < L.size(); ++i) m[i] = i;
    return m;
}

// simple quantifier: exists 0 = 0, exists x = 1 otherwise
inline std::vector<int> simple_map(const Ortholattice& L) {
    std::vector<int> m(L.size(), L.top());
    m[L.bottom()] = L.bottom();
    return m;
}

// least element of the named closed set above each element
inline std::vector<int> closed_set_map(const Ortholattice& L,
                                       const std::vector<std::string>& closed) {
    std::vector<int> members;
    for (const auto& n : closed) members.push_back(L.index_of(n));
    std::vector<int> m(L.size(), -1);
    for (int a = 0; a < L.size(); ++a) {
        int best = -1;
        for (int b : members)
            if (L.leq(a, b) && (best == -1 || L.leq(b, best))) best = b;
        m[a] = best;
    }
    return m;
}

// --- mutation helpers ---------------------------------------------------

inline OLPtr flip_leq(const Ortholattice& L, int a, int b) {
    std::vector<Bitset> rows;
    for (int i = 0; i < L.size(); ++i) rows.push_back(L.up_set(i));
    rows[a].assign(b, !rows[a].test(b));
    std::vector<int> ortho(L.size());
    for (int i = 0; i < L.size(); ++i) ortho[i] = L.ortho(i);
    return std::make_shared<Ortholattice>(L.element_names(), std::move(rows), std::move(ortho));
}

inline OLPtr set_ortho(const Ortholattice& L, int a, int v) {
    std::vector<Bitset> rows;
    for (int i = 0; i < L.size(); ++i) rows.push_back(L.up_set(i));
    std::vector<int> ortho(L.size());
    for (int i = 0; i < L.size(); ++i) ortho[i] = L.ortho(i);
    ortho[a] = v;
    return std::make_shared<Ortholattice>(L.element_names(), std::move(rows), std::move(ortho));
}

// --- independent oracle: direct glb/lub by scanning ----------------------

inline int oracle_glb(const Ortholattice& L, int a, int b) {
    int best = -1;
    for (int c = 0; c < L.size(); ++c) {
        if (!L.leq(c, a) || !L.leq(c, b)) continue;
        if (best == -1 || L.leq(best, c)) best = c;
    }
    if (best == -1) return -1;
    for (int c = 0; c < L.size(); ++c)
        if (L.leq(c, a) && L.leq(c, b) && !L.leq(c, best)) return -1;
    return best;
}

inline int oracle_lub(const Ortholattice& L, int a, int b) {
    int best = -1;
    for (int c = 0; c < L.size(); ++c) {
        if (!L.leq(a, c) || !L.leq(b, c)) continue;
        if (best == -1 || L.leq(c, best)) best = c;
    }
    if (best == -1) return -1;
    for (int c = 0; c < L.size(); ++c)
        if (L.leq(a, c) && L.leq(b, c) && !L.leq(best, c)) return -1;
    return best;
}

// Five quantifier axioms evaluated directly; the brute-force census oracle.
inline bool oracle_quantifier_ok(const Ortholattice& L, const std::vector<int>& e) {
    if (e[L.bottom()] != L.bottom()) return false;
    for (int a = 0; a < L.size(); ++a) {
        if (!L.leq(a, e[a])) return false;
        if (e[e[a]] != e[a]) return false;
        int c = L.ortho(e[a]);
        if (e[c] != c) return false;
        for (int b = 0; b < L.size(); ++b) {
            int j = oracle_lub(L, a, b);
            if (j == -1) return false;
            if (e[j] != oracle_lub(L, e[a], e[b])) return false;
        }
    }
    return true;
}

// All |L|^|L| unary maps filtered by the axioms.
inline std::vector<std::vector<int>> brute_quantifiers(const Ortholattice& L) {
    const int n = L.size();
    std::vector<std::vector<int>> out;
    std::vector<int> e(n, 0);
    while (true) {
        if (oracle_quantifier_ok(L, e)) out.push_back(e);
        int i = n - 1;
        while (i >= 0 && e[i] == n - 1) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All labeled strict orders on k nodes (transitive, antisymmetric DAGs) as
// strict-up masks, generated independently of the library's enumerator and
// deduplicated (branching can revisit the same relation).
inline std::vector<std::vector<std::uint32_t>> all_strict_orders(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) pairs.emplace_back(a, b);

    std::set<std::vector<std::uint32_t>> found;

    auto add = [k](std::vector<std::uint32_t> u, int x, int y) {
        // close x<y transitively; empty result signals a cycle
        std::vector<std::pair<int, int>> work{{x, y}};
        while (!work.empty()) {
            auto [p, q] = work.back();
            work.pop_back();
            if (p == q || ((u[q] >> p) & 1)) return std::vector<std::uint32_t>{};
            if ((u[p] >> q) & 1) continue;
            u[p] |= 1u << q;
            for (int l = 0; l < k; ++l) {
                bool low = l == p || ((u[l] >> p) & 1);
                if (!low) continue;
                for (int h = 0; h < k; ++h) {
                    bool high = h == q || ((u[q] >> h) & 1);
                    if (high && !((u[l] >> h) & 1)) work.push_back({l, h});
                }
            }
        }
        return u;
    };

    struct Rec {
        const std::vector<std::pair<int, int>>& pairs;
        std::set<std::vector<std::uint32_t>>& found;
        const decltype(add)& close;
        void go(std::vector<std::uint32_t> up, std::size_t idx) {
            if (idx == pairs.size()) {
                found.insert(std::move(up));
                return;
            }
            auto [a, b] = pairs[idx];
            if (((up[a] >> b) & 1) || ((up[b] >> a) & 1)) {
                go(std::move(up), idx + 1);
                return;
            }
            go(up, idx + 1);
            if (auto u1 = close(up, a, b); !u1.empty()) go(std::move(u1), idx + 1);
            if (auto u2 = close(up, b, a); !u2.empty()) go(std::move(u2), idx + 1);
        }
    } rec{pairs, found, add};
    rec.go(std::vector<std::uint32_t>(k, 0), 0);
    return {found.begin(), found.end()};
}

}  // namespace fixtures
