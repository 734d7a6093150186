#include "olkit/ortholattice.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace olkit {

namespace {
constexpr int kTableLimit = 2048;  // memoize n*n op tables below this size
}

Ortholattice::Ortholattice(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                           const std::vector<std::pair<std::string, std::string>>& ortho_pairs)
    : names_(std::move(elements)) {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw input_error("duplicate element identifier: " + names_[i]);
    }
    up_.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i) up_[i].set(i);
    for (const auto& [a, b] : leq_pairs) up_[index_of(a)].set(index_of(b));

    // reflexive-transitive closure (covers and full relations both accepted)
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && up_[a].test(b)) {
                    Bitset merged = up_[a] | up_[b];
                    if (!(merged == up_[a])) {
                        up_[a] = std::move(merged);
                        changed = true;
                    }
                }
    }

    ortho_.assign(n, -1);
    for (const auto& [a, b] : ortho_pairs) {
        int i = index_of(a);
        if (ortho_[i] != -1) throw input_error("complement assigned twice for " + a);
        ortho_[i] = index_of(b);
    }
    for (int i = 0; i < n; ++i)
        if (ortho_[i] == -1) throw input_error("complement map not total; missing " + names_[i]);

    init_derived();
}

Ortholattice::Ortholattice(std::vector<std::string> elements,
                           std::vector<Bitset> up_rows,
                           std::vector<int> ortho)
    : names_(std::move(elements)), up_(std::move(up_rows)), ortho_(std::move(ortho)) {
    const int n = size();
    if (static_cast<int>(up_.size()) != n || static_cast<int>(ortho_.size()) != n)
        throw input_error("element count does not match relation/complement size");
    for (int i = 0; i < n; ++i)
        if (!index_.emplace(names_[i], i).second)
            throw input_error("duplicate element identifier: " + names_[i]);
    init_derived();
}

void Ortholattice::init_derived() {
    const int n = size();
    down_.assign(n, Bitset(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (up_[a].test(b)) down_[b].set(a);

    down_count_.resize(n);
    up_count_.resize(n);
    for (int a = 0; a < n; ++a) {
        down_count_[a] = static_cast<int>(down_[a].count());
        up_count_[a] = static_cast<int>(up_[a].count());
    }

    bottom_ = top_ = -1;
    for (int a = 0; a < n; ++a) {
        if (up_count_[a] == n) bottom_ = bottom_ == -1 ? a : bottom_;
        if (down_count_[a] == n) top_ = top_ == -1 ? a : top_;
    }
}

int Ortholattice::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw input_error("unknown element identifier: " + name);
    return it->second;
}

int Ortholattice::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

// The candidate set down(a) & down(b) is down-closed whenever leq is
// transitive, so for any member c the whole of down(c) lies inside it. The
// set then has a greatest element iff its largest down-set covers it all.
int Ortholattice::meet_raw(int a, int b) const {
    if (leq(a, b)) return a;
    if (leq(b, a)) return b;
    Bitset s = down_[a] & down_[b];
    const int total = static_cast<int>(s.count());
    if (total == 0) return -1;
    int best = -1, best_count = -1;
    s.for_each([&](std::size_t c) {
        if (down_count_[c] > best_count) {
            best_count = down_count_[c];
            best = static_cast<int>(c);
        }
    });
    return best_count == total ? best : -1;
}

int Ortholattice::join_raw(int a, int b) const {
    if (leq(a, b)) return b;
    if (leq(b, a)) return a;
    Bitset s = up_[a] & up_[b];
    const int total = static_cast<int>(s.count());
    if (total == 0) return -1;
    int best = -1, best_count = -1;
    s.for_each([&](std::size_t c) {
        if (up_count_[c] > best_count) {
            best_count = up_count_[c];
            best = static_cast<int>(c);
        }
    });
    return best_count == total ? best : -1;
}

void Ortholattice::ensure_tables() const {
    std::call_once(table_once_, [this] {
        const int n = size();
        if (n > kTableLimit) return;
        meet_table_.resize(static_cast<std::size_t>(n) * n);
        join_table_.resize(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                int m = meet_raw(a, b), j = join_raw(a, b);
                meet_table_[static_cast<std::size_t>(a) * n + b] = m;
                meet_table_[static_cast<std::size_t>(b) * n + a] = m;
                join_table_[static_cast<std::size_t>(a) * n + b] = j;
                join_table_[static_cast<std::size_t>(b) * n + a] = j;
            }
        tables_built_ = true;
    });
}

int Ortholattice::meet(int a, int b) const {
    ensure_tables();
    if (tables_built_) return meet_table_[static_cast<std::size_t>(a) * size() + b];
    return meet_raw(a, b);
}

int Ortholattice::join(int a, int b) const {
    ensure_tables();
    if (tables_built_) return join_table_[static_cast<std::size_t>(a) * size() + b];
    return join_raw(a, b);
}

int Ortholattice::meet_all(const Bitset& s) const {
    int acc = top_;
    bool first = true;
    int result = acc;
    s.for_each([&](std::size_t c) {
        if (first) {
            result = static_cast<int>(c);
            first = false;
        } else if (result != -1) {
            result = meet(result, static_cast<int>(c));
        }
    });
    return first ? top_ : result;
}

int Ortholattice::join_all(const Bitset& s) const {
    bool first = true;
    int result = bottom_;
    s.for_each([&](std::size_t c) {
        if (first) {
            result = static_cast<int>(c);
            first = false;
        } else if (result != -1) {
            result = join(result, static_cast<int>(c));
        }
    });
    return first ? bottom_ : result;
}

namespace {

// Order axioms over the raw relation. Everything else presumes these.
Report check_order(const Ortholattice& L) {
    Report r;
    const int n = L.size();
    for (int a = 0; a < n; ++a)
        if (!L.leq(a, a)) r.add(law::reflexivity, {L.name(a)});
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (L.leq(a, b) && L.leq(b, a))
                r.add(law::antisymmetry, {L.name(a), L.name(b)});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !L.leq(a, b)) continue;
            if (!L.up_set(b).subset_of(L.up_set(a))) {
                Bitset bad = L.up_set(b);
                int c = -1;
                bad.for_each([&](std::size_t x) {
                    if (c == -1 && !L.up_set(a).test(x)) c = static_cast<int>(x);
                });
                r.add(law::transitivity, {L.name(a), L.name(b), L.name(c)});
            }
        }
    r.normalize();
    return r;
}

// Per-pair laws, parallelized over the first index. Each thread collects
// into its own list; the merged result is sorted, so the report does not
// depend on the schedule.
void scan_pairs(const Ortholattice& L, const RunConfig& cfg,
                std::vector<Violation>& out) {
    const int n = L.size();
    const bool have_bounds = L.bottom() != -1 && L.top() != -1;
    auto row_scan = [&](int a, std::vector<Violation>& acc) {
        const int oa = L.ortho(a);
        if (L.ortho(oa) != a) acc.push_back({law::involution, {L.name(a)}});
        if (have_bounds) {
            int m = L.meet(a, oa);
            if (m != -1 && m != L.bottom())
                acc.push_back({law::complement_meet, {L.name(a)}});
            int j = L.join(a, oa);
            if (j != -1 && j != L.top())
                acc.push_back({law::complement_join, {L.name(a)}});
        }
        for (int b = 0; b < n; ++b) {
            if (L.leq(a, b) && !L.leq(L.ortho(b), oa))
                acc.push_back({law::order_reversal, {L.name(a), L.name(b)}});
            if (b < a) continue;
            int m = L.meet(a, b), j = L.join(a, b);
            if (m == -1) acc.push_back({law::glb_exists, {L.name(a), L.name(b)}});
            if (j == -1) acc.push_back({law::lub_exists, {L.name(a), L.name(b)}});
            if (j != -1 && m != -1) {
                int lhs = L.ortho(j);
                int rhs = L.meet(oa, L.ortho(b));
                if (lhs != rhs)
                    acc.push_back({law::de_morgan, {L.name(a), L.name(b)}});
            }
        }
    };

    if (cfg.serial()) {
        for (int a = 0; a < n; ++a) row_scan(a, out);
        return;
    }
    const int nt = resolved_threads(cfg);
    std::vector<std::vector<Violation>> parts(nt);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(nt)
#endif
    for (int a = 0; a < n; ++a) {
#ifdef _OPENMP
        auto& acc = parts[omp_get_thread_num()];
#else
        auto& acc = parts[0];
#endif
        row_scan(a, acc);
    }
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
}

}  // namespace

Report check_ortholattice(const Ortholattice& L, const RunConfig& cfg) {
    Report order = check_order(L);
    if (!order.pass()) return order;

    Report r;
    if (L.size() == 0) {
        r.add(law::bottom, {});
        r.add(law::top, {});
        return r;
    }
    if (L.bottom() == -1) {
        // witness: two distinct minimal elements
        std::vector<std::string> w;
        for (int a = 0; a < L.size() && w.size() < 2; ++a) {
            bool minimal = true;
            for (int b = 0; b < L.size(); ++b)
                if (b != a && L.leq(b, a)) minimal = false;
            if (minimal) w.push_back(L.name(a));
        }
        r.add(law::bottom, w);
    }
    if (L.top() == -1) {
        std::vector<std::string> w;
        for (int a = 0; a < L.size() && w.size() < 2; ++a) {
            bool maximal = true;
            for (int b = 0; b < L.size(); ++b)
                if (b != a && L.leq(a, b)) maximal = false;
            if (maximal) w.push_back(L.name(a));
        }
        r.add(law::top, w);
    }
    scan_pairs(L, cfg, r.violations);
    r.normalize();
    return r;
}

int OrthoHomomorphism::apply_name(const std::string& n) const {
    return map[source->index_of(n)];
}

OrthoHomomorphism identity_homomorphism(const OLPtr& L) {
    OrthoHomomorphism h{L, L, {}};
    h.map.resize(L->size());
    for (int i = 0; i < L->size(); ++i) h.map[i] = i;
    return h;
}

OrthoHomomorphism compose(const OrthoHomomorphism& f, const OrthoHomomorphism& g) {
    if (f.target.get() != g.source.get())
        throw input_error("homomorphism composition: carriers do not chain");
    OrthoHomomorphism h{f.source, g.target, {}};
    h.map.resize(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i) h.map[i] = g.map[f.map[i]];
    return h;
}

Report check_homomorphism(const OrthoHomomorphism& h, bool embedding_required) {
    const auto& S = *h.source;
    const auto& T = *h.target;
    if (static_cast<int>(h.map.size()) != S.size())
        throw input_error("homomorphism map not total on source");
    for (int v : h.map)
        if (v < 0 || v >= T.size())
            throw input_error("homomorphism map leaves the target carrier");

    Report r;
    const int n = S.size();
    for (int a = 0; a < n; ++a) {
        if (T.ortho(h.map[a]) != h.map[S.ortho(a)])
            r.add(law::hom_ortho, {S.name(a)});
        for (int b = a; b < n; ++b) {
            int sm = S.meet(a, b), sj = S.join(a, b);
            if (sm != -1 && T.meet(h.map[a], h.map[b]) != h.map[sm])
                r.add(law::hom_meet, {S.name(a), S.name(b)});
            if (sj != -1 && T.join(h.map[a], h.map[b]) != h.map[sj])
                r.add(law::hom_join, {S.name(a), S.name(b)});
        }
    }
    if (S.bottom() != -1 && T.bottom() != -1 && h.map[S.bottom()] != T.bottom())
        r.add(law::hom_bottom, {S.name(S.bottom())});
    if (S.top() != -1 && T.top() != -1 && h.map[S.top()] != T.top())
        r.add(law::hom_top, {S.name(S.top())});
    if (embedding_required) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (h.map[a] == h.map[b])
                    r.add(law::hom_injective, {S.name(a), S.name(b)});
    }
    r.normalize();
    return r;
}

}  // namespace olkit
