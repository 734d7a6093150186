#include "olkit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <mutex>
#include <set>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace olkit {

namespace {

// Encoding block for position p: column cells (i,p) for i<p, row cells (p,i)
// for i<=p, then one complement byte (the position of ortho(element at p)
// when already assigned, 0xFF otherwise). Every block depends only on the
// assignment prefix, so prefix pruning is valid, and the complement byte
// makes the pruning bite on ortho structure as well. The full involution is
// recoverable: a 0xFF at p is resolved by the later position that maps back
// to p.
constexpr std::uint8_t kUnassigned = 0xFF;

struct CanonSearch {
    const Ortholattice& L;
    int n;
    std::vector<int> perm;       // position -> original
    std::vector<int> where;      // original -> position (-1 unassigned)
    std::vector<std::uint8_t> cur;
    std::vector<std::uint8_t> best;
    std::vector<int> best_perm;
    bool have_best = false;

    explicit CanonSearch(const Ortholattice& lat)
        : L(lat), n(lat.size()), perm(n, -1), where(n, -1) {}

    void run() {
        cur.reserve(static_cast<std::size_t>(n) * (n + 1));
        place(0, true);
    }

    // `tight` = the current prefix equals best's prefix; only then can a
    // later byte disqualify the branch.
    void place(int p, bool tight) {
        if (p == n) {
            if (!have_best || cur < best) {
                best = cur;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        const std::size_t mark = cur.size();
        for (int e = 0; e < n; ++e) {
            if (where[e] != -1) continue;
            perm[p] = e;
            where[e] = p;
            bool ok = true, now_tight = tight, now_less = false;
            for (int i = 0; i < p && ok; ++i)
                ok = push_byte(L.leq(perm[i], e) ? 1 : 0, now_tight, now_less);
            for (int i = 0; i <= p && ok; ++i)
                ok = push_byte(L.leq(e, perm[i]) ? 1 : 0, now_tight, now_less);
            if (ok) {
                int q = where[L.ortho(e)];
                ok = push_byte(q >= 0 ? static_cast<std::uint8_t>(q) : kUnassigned,
                               now_tight, now_less);
            }
            if (ok) place(p + 1, now_tight && !now_less);
            cur.resize(mark);
            where[e] = -1;
            perm[p] = -1;
        }
    }

    bool push_byte(std::uint8_t b, bool& tight, bool& less) {
        std::size_t pos = cur.size();
        if (tight && have_best && pos < best.size()) {
            if (b > best[pos]) return false;
            if (b < best[pos]) {
                tight = false;
                less = true;
            }
        }
        cur.push_back(b);
        return true;
    }
};

std::vector<std::uint8_t> encode_under(const Ortholattice& L, const std::vector<int>& perm) {
    const int n = L.size();
    std::vector<int> where(n);
    for (int p = 0; p < n; ++p) where[perm[p]] = p;
    std::vector<std::uint8_t> enc;
    enc.reserve(static_cast<std::size_t>(n) * (n + 1));
    for (int p = 0; p < n; ++p) {
        for (int i = 0; i < p; ++i) enc.push_back(L.leq(perm[i], perm[p]) ? 1 : 0);
        for (int i = 0; i <= p; ++i) enc.push_back(L.leq(perm[p], perm[i]) ? 1 : 0);
        int q = where[L.ortho(perm[p])];
        enc.push_back(q <= p ? static_cast<std::uint8_t>(q) : kUnassigned);
    }
    return enc;
}

std::string position_name(int i, int n) {
    std::string d = std::to_string(i);
    std::size_t width = std::to_string(n - 1).size();
    while (d.size() < width) d.insert(d.begin(), '0');
    return "e" + d;
}

// Any isomorphism of ortholattices maps bottom to bottom, top to top, and
// complement pairs to complement pairs. When the candidate has that shape
// (unique bounds, involutive fixed-point-free complement pairing them), the
// canonical form can therefore be taken as the minimum over the
// pair-structured relabelings only: k! pair orders times 2^k orientations
// for k = (n-2)/2 pairs. Inputs without the shape (arbitrary check
// candidates) fall back to the full backtracking search.
std::optional<std::vector<std::pair<int, int>>> complement_pairs(const Ortholattice& L) {
    const int n = L.size();
    if (n < 2 || L.bottom() == -1 || L.top() == -1 || L.bottom() == L.top())
        return std::nullopt;
    for (int a = 0; a < n; ++a)
        if (L.ortho(L.ortho(a)) != a) return std::nullopt;
    if (L.ortho(L.bottom()) != L.top()) return std::nullopt;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
        if (a == L.bottom() || a == L.top()) continue;
        if (L.ortho(a) == a) return std::nullopt;
        if (a < L.ortho(a)) pairs.emplace_back(a, L.ortho(a));
    }
    return pairs;
}

std::vector<int> structured_labeling(const Ortholattice& L,
                                     const std::vector<std::pair<int, int>>& pairs) {
    const int n = L.size();
    const int k = static_cast<int>(pairs.size());
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;

    std::vector<int> perm(n), best_perm;
    std::vector<std::uint8_t> best;
    do {
        for (std::uint32_t flips = 0; flips < (1u << k); ++flips) {
            for (int j = 0; j < k; ++j) {
                auto [x, y] = pairs[order[j]];
                if ((flips >> j) & 1) std::swap(x, y);
                perm[2 * j] = x;
                perm[2 * j + 1] = y;
            }
            perm[n - 2] = L.bottom();
            perm[n - 1] = L.top();
            auto enc = encode_under(L, perm);
            if (best.empty() || enc < best) {
                best = std::move(enc);
                best_perm = perm;
            }
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return best_perm;
}

}  // namespace

std::vector<int> canonical_labeling(const Ortholattice& L) {
    if (L.size() == 0) return {};
    if (auto pairs = complement_pairs(L)) return structured_labeling(L, *pairs);
    CanonSearch s(L);
    s.run();
    return s.best_perm;
}

std::vector<std::uint8_t> canonical_form(const Ortholattice& L) {
    if (L.size() == 0) return {};
    return encode_under(L, canonical_labeling(L));
}

OLPtr canonicalize(const Ortholattice& L) {
    const int n = L.size();
    auto perm = canonical_labeling(L);
    std::vector<int> where(n);
    for (int p = 0; p < n; ++p) where[perm[p]] = p;
    std::vector<std::string> names(n);
    for (int p = 0; p < n; ++p) names[p] = position_name(p, n);
    std::vector<Bitset> rows(n, Bitset(n));
    std::vector<int> ortho(n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q)
            if (L.leq(perm[p], perm[q])) rows[p].set(q);
        ortho[p] = where[L.ortho(perm[p])];
    }
    return std::make_shared<Ortholattice>(std::move(names), std::move(rows), std::move(ortho));
}

std::optional<OrthoHomomorphism> is_isomorphic(const OLPtr& L1, const OLPtr& L2) {
    if (L1->size() != L2->size()) return std::nullopt;
    if (L1->size() == 0) return OrthoHomomorphism{L1, L2, {}};
    auto p1 = canonical_labeling(*L1);
    auto p2 = canonical_labeling(*L2);
    if (encode_under(*L1, p1) != encode_under(*L2, p2)) return std::nullopt;
    OrthoHomomorphism h{L1, L2, std::vector<int>(L1->size())};
    for (int p = 0; p < L1->size(); ++p) h.map[p1[p]] = p2[p];
    if (!check_homomorphism(h, true).pass()) return std::nullopt;
    return h;
}

namespace {

// Middle-element order generation. Elements 0..m-1 are the non-bound
// elements; the complement pairing is fixed as 2i <-> 2i+1 (every
// fixed-point-free involution is conjugate to it, and the final canonical
// dedupe absorbs the choice). A strict order on middles extends to an
// ortholattice iff it is transitive, reversed by the pairing, no element is
// comparable to its partner, no pair {x, partner(x)} has a common strict
// lower bound, and every incomparable pair's lower-bound set has a greatest
// element when non-empty (joins follow by duality).
struct MiddleGen {
    int m;
    std::vector<std::uint32_t> down, up;   // strict relations as masks
    std::vector<std::uint32_t> forbidden;  // pairs fixed as incomparable

    explicit MiddleGen(int middles)
        : m(middles), down(middles, 0), up(middles, 0), forbidden(middles, 0) {}

    static int partner(int x) { return x ^ 1; }

    bool lt(int a, int b) const { return (up[a] >> b) & 1; }

    // Fixes a and b incomparable (in both orientations, plus the mirrored
    // pair), so each total assignment is reached exactly once.
    bool exclude(int a, int b) {
        if (lt(a, b) || lt(b, a)) return false;
        forbidden[a] |= 1u << b;
        forbidden[b] |= 1u << a;
        forbidden[partner(a)] |= 1u << partner(b);
        forbidden[partner(b)] |= 1u << partner(a);
        return true;
    }

    // Adds a<b plus everything transitivity and the pairing force.
    // Returns false on conflict with the ortholattice constraints.
    bool add(int a, int b) {
        std::vector<std::pair<int, int>> work{{a, b}};
        while (!work.empty()) {
            auto [x, y] = work.back();
            work.pop_back();
            if (x == y) return false;
            if (lt(x, y)) continue;
            if (lt(y, x)) return false;
            if ((forbidden[x] >> y) & 1) return false;
            if (y == partner(x) || x == partner(y)) return false;
            up[x] |= 1u << y;
            down[y] |= 1u << x;
            if (down[y] & down[partner(y)]) return false;
            if (down[x] & (1u << partner(y))) return false;  // partner(y) < x < y
            work.push_back({partner(y), partner(x)});
            // close under transitivity
            std::uint32_t lows = down[x] | (1u << x);
            std::uint32_t highs = up[y] | (1u << y);
            for (int l = 0; l < m; ++l)
                if ((lows >> l) & 1)
                    for (int h = 0; h < m; ++h)
                        if (((highs >> h) & 1) && !lt(l, h) && !(l == x && h == y))
                            work.push_back({l, h});
        }
        return true;
    }

    bool lattice_ok() const {
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y) {
                if (lt(x, y) || lt(y, x)) continue;
                std::uint32_t s = down[x] & down[y];
                if (!s) continue;
                bool greatest = false;
                for (int t = 0; t < m && !greatest; ++t)
                    if (((s >> t) & 1) && (s & ~(down[t] | (1u << t))) == 0)
                        greatest = true;
                if (!greatest) return false;
            }
        return true;
    }
};

OLPtr assemble(const MiddleGen& g) {
    const int m = g.m, n = m + 2;
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = "t" + std::to_string(i);
    std::vector<Bitset> rows(n, Bitset(n));
    std::vector<int> ortho(n);
    // index 0 = bottom, 1..m = middles, n-1 = top
    rows[0].fill();
    rows[n - 1].set(n - 1);
    ortho[0] = n - 1;
    ortho[n - 1] = 0;
    for (int x = 0; x < m; ++x) {
        rows[x + 1].set(x + 1);
        rows[x + 1].set(n - 1);
        for (int y = 0; y < m; ++y)
            if (g.lt(x, y)) rows[x + 1].set(y + 1);
        ortho[x + 1] = MiddleGen::partner(x) + 1;
    }
    return std::make_shared<Ortholattice>(std::move(names), std::move(rows), std::move(ortho));
}

using Encoding = std::vector<std::uint8_t>;

void explore(MiddleGen g, int pair_index, const std::vector<std::pair<int, int>>& pairs,
             std::set<Encoding>& found) {
    if (pair_index == static_cast<int>(pairs.size())) {
        if (!g.lattice_ok()) return;
        found.insert(canonical_form(*assemble(g)));
        return;
    }
    auto [a, b] = pairs[pair_index];
    if (g.lt(a, b) || g.lt(b, a)) {  // forced earlier by closure
        explore(std::move(g), pair_index + 1, pairs, found);
        return;
    }
    MiddleGen g0 = g;
    if (g0.exclude(a, b)) explore(std::move(g0), pair_index + 1, pairs, found);
    MiddleGen g1 = g;
    if (g1.add(a, b)) explore(std::move(g1), pair_index + 1, pairs, found);
    MiddleGen g2 = std::move(g);
    if (g2.add(b, a)) explore(std::move(g2), pair_index + 1, pairs, found);
}

// Enumerate all decision prefixes of the first `depth` pairs; used to carve
// the search tree into independent chunks for the parallel kernel.
void prefixes(MiddleGen g, int pair_index, int depth,
              const std::vector<std::pair<int, int>>& pairs,
              std::vector<std::pair<MiddleGen, int>>& out) {
    if (pair_index == depth || pair_index == static_cast<int>(pairs.size())) {
        out.emplace_back(std::move(g), pair_index);
        return;
    }
    auto [a, b] = pairs[pair_index];
    if (g.lt(a, b) || g.lt(b, a)) {
        prefixes(std::move(g), pair_index + 1, depth, pairs, out);
        return;
    }
    MiddleGen g0 = g;
    if (g0.exclude(a, b)) prefixes(std::move(g0), pair_index + 1, depth, pairs, out);
    MiddleGen g1 = g;
    if (g1.add(a, b)) prefixes(std::move(g1), pair_index + 1, depth, pairs, out);
    MiddleGen g2 = std::move(g);
    if (g2.add(b, a)) prefixes(std::move(g2), pair_index + 1, depth, pairs, out);
}

std::vector<std::pair<int, int>> middle_pairs(int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
    return pairs;
}

}  // namespace

std::vector<std::vector<std::uint8_t>> enumerate_encodings_serial(int n) {
    if (n % 2) return {};
    const int m = n - 2;
    auto pairs = middle_pairs(m);
    std::set<Encoding> found;
    explore(MiddleGen(m), 0, pairs, found);
    return {found.begin(), found.end()};
}

std::vector<std::vector<std::uint8_t>> enumerate_encodings_parallel(int n, int threads) {
    if (n % 2) return {};
    const int m = n - 2;
    auto pairs = middle_pairs(m);
    if (pairs.size() < 6) return enumerate_encodings_serial(n);

    std::vector<std::pair<MiddleGen, int>> chunks;
    prefixes(MiddleGen(m), 0, 4, pairs, chunks);
    std::vector<std::set<Encoding>> parts(chunks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : 1)
#endif
    for (std::size_t i = 0; i < chunks.size(); ++i)
        explore(chunks[i].first, chunks[i].second, pairs, parts[i]);
    std::set<Encoding> found;
    for (auto& p : parts) found.insert(p.begin(), p.end());
    return {found.begin(), found.end()};
}

namespace {

OLPtr from_encoding(const Encoding& enc, int n) {
    std::vector<std::string> names(n);
    for (int p = 0; p < n; ++p) names[p] = position_name(p, n);
    std::vector<Bitset> rows(n, Bitset(n));
    std::vector<int> ortho(n, -1);
    std::size_t k = 0;
    for (int p = 0; p < n; ++p) {
        for (int i = 0; i < p; ++i, ++k)
            if (enc[k]) rows[i].set(p);
        for (int i = 0; i <= p; ++i, ++k)
            if (enc[k]) rows[p].set(i);
        std::uint8_t o = enc[k++];
        if (o != kUnassigned) {
            ortho[p] = o;
            ortho[o] = p;
        }
    }
    for (int p = 0; p < n; ++p)
        if (ortho[p] == -1) throw internal_error("encoding leaves a complement unresolved");
    return std::make_shared<Ortholattice>(std::move(names), std::move(rows), std::move(ortho));
}

}  // namespace

std::vector<OLPtr> enumerate_ortholattices(int n, const RunConfig& cfg, int cap) {
    if (n < 2) throw input_error("enumeration needs size >= 2");
    if (n > cap) throw cap_error("enumeration size " + std::to_string(n) +
                                 " above cap " + std::to_string(cap));

    static std::mutex cache_mutex;
    static std::map<int, std::vector<OLPtr>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    auto encodings = cfg.serial() ? enumerate_encodings_serial(n)
                                  : enumerate_encodings_parallel(n, resolved_threads(cfg));
    std::vector<OLPtr> out;
    for (const auto& enc : encodings) {
        auto L = from_encoding(enc, n);
        if (!check_ortholattice(*L, cfg).pass())
            throw internal_error("enumerated algebra fails the law checker");
        out.push_back(std::move(L));
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, out);
    return out;
}

}  // namespace olkit
