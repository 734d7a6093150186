#include "olkit/polyadic.hpp"

#include <algorithm>
#include <random>

namespace olkit {

const std::vector<int>* SigmaFreePolyadic::find_generator(const std::string& index) const {
    for (const auto& [tok, emap] : generators)
        if (tok == index) return &emap;
    return nullptr;
}

int nabla_eval(const SigmaFreePolyadic& P, const IndexSet& J, int a) {
    if (!(*J.universe == *P.universe))
        throw input_error("index set over a different universe than the structure");
    int result = a;
    for (const auto& [tok, emap] : P.generators) {  // ascending index order
        if (!J.contains(tok)) continue;
        if (emap[a] == a) continue;  // tok lies in S_a
        result = emap[result];
    }
    return result;
}

namespace {

std::vector<int> materialize_nabla(const SigmaFreePolyadic& P, const IndexSet& J) {
    std::vector<int> map(P.carrier->size());
    for (int a = 0; a < P.carrier->size(); ++a) map[a] = nabla_eval(P, J, a);
    return map;
}

// Test family over omega: every Fin/CoFin set built from the active indices
// plus one fresh index.
std::vector<IndexSet> omega_test_family(const SigmaFreePolyadic& P) {
    std::vector<std::string> pool;
    for (const auto& [tok, emap] : P.generators) pool.push_back(tok);
    for (unsigned long long c = 0;; ++c) {
        std::string fresh = std::to_string(c);
        if (!P.find_generator(fresh)) {
            pool.push_back(fresh);
            break;
        }
    }
    std::vector<IndexSet> family;
    const std::uint32_t full = (1u << pool.size()) - 1;
    for (std::uint32_t m = 0; m <= full; ++m) {
        std::vector<std::string> elems;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if ((m >> i) & 1) elems.push_back(pool[i]);
        family.push_back(IndexSet::fin(P.universe, elems));
        family.push_back(IndexSet::cofin(P.universe, elems));
    }
    return family;
}

std::vector<IndexSet> finite_subsets(const SigmaFreePolyadic& P) {
    const auto& names = P.universe->names;
    if (names.size() > 10)
        throw cap_error("finite universe too large for the exhaustive subset check");
    std::vector<IndexSet> family;
    const std::uint32_t full = (1u << names.size()) - 1;
    for (std::uint32_t m = 0; m <= full; ++m) {
        std::vector<std::string> elems;
        for (std::size_t i = 0; i < names.size(); ++i)
            if ((m >> i) & 1) elems.push_back(names[i]);
        family.push_back(IndexSet::fin(P.universe, elems));
    }
    return family;
}

void check_pair(const SigmaFreePolyadic& P, const IndexSet& J, const IndexSet& K, Report& r) {
    IndexSet u = iset_union(J, K);
    for (int a = 0; a < P.carrier->size(); ++a) {
        int lhs = nabla_eval(P, u, a);
        int rhs = nabla_eval(P, J, nabla_eval(P, K, a));
        if (lhs != rhs)
            r.add(law::nabla_union, {J.to_string(), K.to_string(), P.carrier->name(a)});
    }
}

}  // namespace

Report check_sigma_free(const SigmaFreePolyadic& P, const RunConfig& cfg) {
    Report r;
    const auto& L = *P.carrier;
    for (const auto& [tok, emap] : P.generators) {
        if (!P.universe->contains(tok))
            throw input_error("generator index outside the universe: " + tok);
        Report q = check_quantifier(L, emap, cfg);
        for (auto& v : q.violations) {
            v.witness.insert(v.witness.begin(), "{" + tok + "}");
            r.violations.push_back(std::move(v));
        }
    }

    // condition 1
    IndexSet empty = IndexSet::empty(P.universe);
    for (int a = 0; a < L.size(); ++a)
        if (nabla_eval(P, empty, a) != a) r.add(law::nabla_empty, {L.name(a)});

    std::vector<IndexSet> family =
        P.universe->omega ? omega_test_family(P) : finite_subsets(P);
    for (const auto& J : family)
        for (const auto& K : family) check_pair(P, J, K, r);
    r.note("checked " + std::to_string(family.size() * family.size()) + " subset pairs");

    // evaluated maps must themselves be quantifiers
    for (const auto& J : family) {
        auto map = materialize_nabla(P, J);
        Report q = check_quantifier(L, map, cfg);
        for (auto& v : q.violations) {
            v.witness.insert(v.witness.begin(), J.to_string());
            v.law = std::string(law::nabla_quantifier_prefix) + "-" + v.law;
            r.violations.push_back(std::move(v));
        }
    }

    if (P.universe->omega) {
        std::mt19937_64 rng(cfg.seed);
        std::vector<std::string> pool;
        for (const auto& [tok, emap] : P.generators) pool.push_back(tok);
        for (unsigned long long c = 0; pool.size() < P.generators.size() + 4; ++c) {
            std::string tok = std::to_string(c);
            if (!P.find_generator(tok)) pool.push_back(tok);
        }
        auto random_set = [&]() {
            std::vector<std::string> elems;
            for (const auto& tok : pool)
                if (rng() & 1) elems.push_back(tok);
            return (rng() & 1) ? IndexSet::cofin(P.universe, elems)
                               : IndexSet::fin(P.universe, elems);
        };
        int samples = cfg.sample_count;
        for (int s = 0; s < samples; ++s) check_pair(P, random_set(), random_set(), r);
        r.note("sampled " + std::to_string(samples) + " random subset pairs (seed " +
               std::to_string(cfg.seed) + ")");
    }
    r.normalize();
    return r;
}

IndexSet support_of(const SigmaFreePolyadic& P, int a) {
    std::vector<std::string> moved;
    for (const auto& [tok, emap] : P.generators)
        if (emap[a] != a) moved.push_back(tok);
    IndexSet support = IndexSet::fin(P.universe, std::move(moved));
    if (nabla_eval(P, iset_complement(support), a) != a)
        throw internal_error("support does not satisfy its defining equation");
    return support;
}

SigmaFreePolyadic cyl_to_pol(const DeltaFreeCylindric& C, const RunConfig& cfg) {
    Report fam = check_family(C, cfg);
    if (fam.has(law::commutation))
        throw input_error("non-commuting family refused: nabla composition would be ill-defined");
    if (!fam.pass()) throw input_error("invalid quantifier family: " + fam.violations[0].law);
    check_locally_finite_cyl(C);  // always passes under the representation; recomputed anyway

    SigmaFreePolyadic P{C.carrier, C.universe, C.active};
    Report r = check_sigma_free(P, cfg);
    if (!r.pass())
        throw internal_error("induced polyadic structure failed the sigma-free laws: " +
                             r.violations[0].law);
    for (const auto& [tok, emap] : C.active) {
        IndexSet singleton = IndexSet::fin(C.universe, {tok});
        for (int a = 0; a < C.carrier->size(); ++a)
            if (nabla_eval(P, singleton, a) != emap[a])
                throw internal_error("nabla over a singleton disagrees with the generator");
    }
    return P;
}

DeltaFreeCylindric pol_to_cyl(const SigmaFreePolyadic& P, const RunConfig& cfg) {
    Report sf = check_sigma_free(P, cfg);
    if (!sf.pass())
        throw input_error("pol_to_cyl needs a valid sigma-free structure: " +
                          sf.violations[0].law);
    DeltaFreeCylindric C{P.carrier, P.universe, {}};
    for (const auto& [tok, emap] : P.generators) {
        IndexSet singleton = IndexSet::fin(P.universe, {tok});
        C.active.emplace_back(tok, materialize_nabla(P, singleton));
    }
    Report fam = check_family(C, cfg);
    if (!fam.pass())
        throw internal_error("induced cylindric family failed verification: " +
                             fam.violations[0].law);
    check_locally_finite_cyl(C);
    return C;
}

Report roundtrip_check(const DeltaFreeCylindric& C, const RunConfig& cfg) {
    Report r;
    SigmaFreePolyadic P = cyl_to_pol(C, cfg);
    DeltaFreeCylindric back = pol_to_cyl(P, cfg);
    for (const auto& [tok, emap] : C.active) {
        IndexSet singleton = IndexSet::fin(C.universe, {tok});
        const auto* hat = back.find_active(tok);
        if (!hat) {
            r.add("roundtrip-missing-index", {tok});
            continue;
        }
        for (int a = 0; a < C.carrier->size(); ++a) {
            int direct = emap[a];
            int via_nabla = nabla_eval(P, singleton, a);
            int via_hat = (*hat)[a];
            if (direct != via_nabla || via_nabla != via_hat)
                r.add("roundtrip", {tok, C.carrier->name(a)});
        }
    }
    r.normalize();
    return r;
}

SigmaFreePolyadic from_explicit_tables(const OLPtr& carrier, const IndexUniversePtr& universe,
                                       const std::map<std::string, std::vector<int>>& tables) {
    if (universe->omega)
        throw input_error("explicit nabla tables require a finite universe");
    SigmaFreePolyadic P{carrier, universe, {}};
    for (const auto& idx : universe->names) {
        auto it = tables.find(idx);
        if (it == tables.end())
            throw input_error("explicit tables missing the singleton for index " + idx);
        P.generators.emplace_back(idx, it->second);
    }
    for (const auto& [key, emap] : tables) {
        std::vector<std::string> elems;
        std::string cur;
        for (char ch : key) {
            if (ch == ',') {
                elems.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) elems.push_back(cur);
        IndexSet J = IndexSet::fin(universe, elems);
        for (int a = 0; a < carrier->size(); ++a)
            if (nabla_eval(P, J, a) != emap[a])
                throw input_error("explicit nabla table for {" + key +
                                  "} is not generated by its singletons (element " +
                                  carrier->name(a) + ")");
    }
    return P;
}

}  // namespace olkit
