#include "olkit/monadic.hpp"

#include <algorithm>
#include <charconv>

namespace olkit {

Report check_quantifier(const Ortholattice& L, const std::vector<int>& emap,
                        const RunConfig& cfg) {
    (void)cfg;
    const int n = L.size();
    if (static_cast<int>(emap.size()) != n)
        throw input_error("quantifier map not total on carrier");
    for (int v : emap)
        if (v < 0 || v >= n) throw input_error("quantifier map leaves the carrier");

    Report r;
    if (L.bottom() == -1 || L.top() == -1)
        throw input_error("quantifier check needs a bounded carrier");
    if (emap[L.bottom()] != L.bottom()) r.add(law::q_bottom, {L.name(L.bottom())});
    for (int a = 0; a < n; ++a) {
        if (emap[emap[a]] != emap[a]) r.add(law::q_idempotent, {L.name(a)});
        if (!L.leq(a, emap[a])) r.add(law::q_increasing, {L.name(a)});
        int ca = L.ortho(emap[a]);
        if (emap[ca] != ca) r.add(law::q_closed_complement, {L.name(a)});
        for (int b = a; b < n; ++b) {
            int j = L.join(a, b);
            if (j == -1) continue;
            if (emap[j] != L.join(emap[a], emap[b]))
                r.add(law::q_additive, {L.name(a), L.name(b)});
        }
    }
    r.normalize();
    return r;
}

SubOrtholattice closed_elements(const MonadicOrtholattice& M) {
    const auto& L = *M.carrier;
    if (!check_quantifier(L, M.exists).pass())
        throw input_error("closed_elements needs a valid quantifier");

    std::vector<int> members;
    for (int a = 0; a < L.size(); ++a)
        if (M.exists[a] == a) members.push_back(a);

    std::vector<int> pos(L.size(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);

    auto closed = [&](int ambient) { return ambient != -1 && pos[ambient] != -1; };
    for (int a : members) {
        if (!closed(L.ortho(a)))
            throw internal_error("closed elements not closed under ortho");
        for (int b : members) {
            if (!closed(L.meet(a, b)) || !closed(L.join(a, b)))
                throw internal_error("closed elements not closed under meet/join");
        }
    }
    if (!closed(L.bottom()) || !closed(L.top()))
        throw internal_error("closed elements miss a bound");

    const int k = static_cast<int>(members.size());
    std::vector<std::string> names(k);
    std::vector<Bitset> rows(k, Bitset(k));
    std::vector<int> ortho(k);
    for (int i = 0; i < k; ++i) {
        names[i] = L.name(members[i]);
        ortho[i] = pos[L.ortho(members[i])];
        for (int j = 0; j < k; ++j)
            if (L.leq(members[i], members[j])) rows[i].set(j);
    }
    auto sub = std::make_shared<Ortholattice>(std::move(names), std::move(rows), std::move(ortho));
    OrthoHomomorphism incl{sub, M.carrier, members};
    return {sub, std::move(incl), members};
}

namespace {
const char* l_forall_mult = "forall-multiplicative";
const char* l_forall_top = "forall-top";
const char* l_forall_idem = "forall-idempotent";
const char* l_forall_dec = "forall-decreasing";
const char* l_forall_open = "forall-open-complement";
const char* l_duality = "forall-exists-duality";
const char* l_open_closed = "open-equals-closed";
}  // namespace

ForallResult forall_of(const MonadicOrtholattice& M) {
    const auto& L = *M.carrier;
    ForallResult res;
    res.forall.resize(L.size());
    for (int a = 0; a < L.size(); ++a)
        res.forall[a] = L.ortho(M.exists[L.ortho(a)]);

    Report& r = res.report;
    const auto& fa = res.forall;
    if (L.top() != -1 && fa[L.top()] != L.top()) r.add(l_forall_top, {L.name(L.top())});
    for (int a = 0; a < L.size(); ++a) {
        if (fa[fa[a]] != fa[a]) r.add(l_forall_idem, {L.name(a)});
        if (!L.leq(fa[a], a)) r.add(l_forall_dec, {L.name(a)});
        int oa = L.ortho(fa[a]);
        if (fa[oa] != oa) r.add(l_forall_open, {L.name(a)});
        if (L.ortho(fa[L.ortho(a)]) != M.exists[a]) r.add(l_duality, {L.name(a)});
        if ((fa[a] == a) != (M.exists[a] == a)) r.add(l_open_closed, {L.name(a)});
        for (int b = a; b < L.size(); ++b) {
            int m = L.meet(a, b);
            if (m == -1) continue;
            if (fa[m] != L.meet(fa[a], fa[b]))
                r.add(l_forall_mult, {L.name(a), L.name(b)});
        }
    }
    r.normalize();
    return res;
}

std::vector<std::vector<int>> enumerate_quantifiers(const Ortholattice& L,
                                                    const RunConfig& cfg, int cap) {
    const int n = L.size();
    if (n > cap)
        throw cap_error("quantifier enumeration carrier size " + std::to_string(n) +
                        " above cap " + std::to_string(cap));
    if (!check_ortholattice(L, cfg).pass())
        throw input_error("quantifier enumeration needs a valid ortholattice");

    std::vector<std::vector<int>> out;
    const std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (!(mask & (1u << L.bottom())) || !(mask & (1u << L.top()))) continue;
        bool closed = true;
        for (int a = 0; a < n && closed; ++a) {
            if (!((mask >> a) & 1)) continue;
            if (!((mask >> L.ortho(a)) & 1)) closed = false;
            for (int b = a; b < n && closed; ++b) {
                if (!((mask >> b) & 1)) continue;
                if (!((mask >> L.meet(a, b)) & 1) || !((mask >> L.join(a, b)) & 1))
                    closed = false;
            }
        }
        if (!closed) continue;
        // least closed element above each a
        std::vector<int> emap(n);
        for (int a = 0; a < n; ++a) {
            Bitset above(n);
            L.up_set(a).for_each([&](std::size_t b) {
                if ((mask >> b) & 1) above.set(b);
            });
            emap[a] = L.meet_all(above);
        }
        if (check_quantifier(L, emap, cfg).pass()) out.push_back(std::move(emap));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool IndexUniverse::contains(const std::string& token) const {
    if (!omega)
        return std::find(names.begin(), names.end(), token) != names.end();
    if (token.empty()) return false;
    unsigned long long v = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    return ec == std::errc() && p == token.data() + token.size();
}

bool IndexUniverse::token_less(const std::string& a, const std::string& b) const {
    if (omega) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;  // equal-width decimal compares numerically
    }
    auto ia = std::find(names.begin(), names.end(), a);
    auto ib = std::find(names.begin(), names.end(), b);
    return ia < ib;
}

IndexUniversePtr finite_universe(std::vector<std::string> names) {
    auto u = std::make_shared<IndexUniverse>();
    u->omega = false;
    u->names = std::move(names);
    return u;
}

IndexUniversePtr omega_universe() {
    auto u = std::make_shared<IndexUniverse>();
    u->omega = true;
    return u;
}

const std::vector<int>* DeltaFreeCylindric::find_active(const std::string& index) const {
    for (const auto& [tok, emap] : active)
        if (tok == index) return &emap;
    return nullptr;
}

int DeltaFreeCylindric::apply(const std::string& index, int a) const {
    const auto* emap = find_active(index);
    return emap ? (*emap)[a] : a;
}

int CylindricOrtholattice::diagonal(const std::string& i, const std::string& k) const {
    auto it = diagonals.find({i, k});
    if (it == diagonals.end())
        throw input_error("diagonal map not total over active index pairs: missing (" +
                          i + "," + k + ")");
    return it->second;
}

namespace {

void prefix_with_index(Report& sub, const std::string& index, Report& out) {
    for (auto& v : sub.violations) {
        v.witness.insert(v.witness.begin(), index);
        out.violations.push_back(std::move(v));
    }
}

// Fresh omega index not among the active ones; the default-identity
// representative for commutation checks.
std::string fresh_omega_index(const DeltaFreeCylindric& S) {
    for (unsigned long long c = 0;; ++c) {
        std::string tok = std::to_string(c);
        if (!S.find_active(tok)) return tok;
    }
}

}  // namespace

Report check_family(const DeltaFreeCylindric& S, const RunConfig& cfg) {
    const auto& L = *S.carrier;
    Report r;
    for (const auto& [tok, emap] : S.active) {
        if (!S.universe->contains(tok))
            throw input_error("active index outside the universe: " + tok);
        Report q = check_quantifier(L, emap, cfg);
        prefix_with_index(q, tok, r);
    }

    std::vector<std::pair<std::string, std::vector<int>>> reps = S.active;
    if (S.universe->omega) {
        std::vector<int> id(L.size());
        for (int i = 0; i < L.size(); ++i) id[i] = i;
        reps.emplace_back(fresh_omega_index(S), std::move(id));
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t k = i + 1; k < reps.size(); ++k)
            for (int a = 0; a < L.size(); ++a) {
                int ik = reps[i].second[reps[k].second[a]];
                int ki = reps[k].second[reps[i].second[a]];
                if (ik != ki)
                    r.add(law::commutation, {reps[i].first, reps[k].first, L.name(a)});
            }
    r.normalize();
    return r;
}

Report check_family(const CylindricOrtholattice& S, const RunConfig& cfg) {
    Report r = check_family(S.family, cfg);
    const auto& L = *S.family.carrier;

    std::vector<std::string> idx;
    for (const auto& [tok, emap] : S.family.active) idx.push_back(tok);

    for (const auto& i : idx)
        for (const auto& k : idx) {
            int d = S.diagonal(i, k);  // throws when not total
            if (d != S.diagonal(k, i)) r.add(law::diagonal_symmetry, {i, k});
            if (i == k && d != L.top()) r.add(law::diagonal_identity, {i});
        }
    // exists_k(d_{i,k} /\ d_{k,l}) = d_{i,l} whenever i != k and l != k
    for (const auto& i : idx)
        for (const auto& k : idx)
            for (const auto& l : idx) {
                if (i == k || l == k) continue;
                int m = L.meet(S.diagonal(i, k), S.diagonal(k, l));
                if (m == -1 || S.family.apply(k, m) != S.diagonal(i, l))
                    r.add(law::diagonal_composition, {i, k, l});
            }
    r.normalize();
    return r;
}

Report check_locally_finite_cyl(const DeltaFreeCylindric& S) {
    const auto& L = *S.carrier;
    Report r;
    for (int a = 0; a < L.size(); ++a) {
        std::vector<std::string> moved;
        for (const auto& [tok, emap] : S.active)
            if (emap[a] != a) moved.push_back(tok);
        // S_a = universe minus `moved`; cofinite by construction over omega
        // and trivially over a finite universe.
        std::string desc = S.universe->omega ? "omega\\{" : "universe\\{";
        for (std::size_t i = 0; i < moved.size(); ++i) {
            if (i) desc += ',';
            desc += moved[i];
        }
        desc += '}';
        r.note("S[" + L.name(a) + "] = " + desc + " (cofinite)");
    }
    return r;
}

}  // namespace olkit
