#include "olkit/functional.hpp"

#include <algorithm>
#include <bit>

#include "olkit/enumerate.hpp"

namespace olkit {

DomainPtr plain_domain(std::vector<std::string> points) {
    if (points.empty()) throw input_error("point set must be non-empty");
    auto d = std::make_shared<TupleDomain>();
    d->points = std::move(points);
    for (std::size_t i = 0; i < d->points.size(); ++i) {
        d->tuples.push_back({static_cast<int>(i)});
        d->names.push_back(d->points[i]);
    }
    return d;
}

DomainPtr power_domain(std::vector<std::string> points, std::vector<std::string> indices) {
    if (points.empty()) throw input_error("point set must be non-empty");
    if (indices.empty()) throw input_error("index set must be non-empty for a power domain");
    auto d = std::make_shared<TupleDomain>();
    d->points = std::move(points);
    d->indices = std::move(indices);
    const int arity = static_cast<int>(d->indices.size());
    std::vector<int> t(arity, 0);
    while (true) {
        d->tuples.push_back(t);
        std::string nm = "(";
        for (int i = 0; i < arity; ++i) {
            if (i) nm += ',';
            nm += d->points[t[i]];
        }
        nm += ')';
        d->names.push_back(std::move(nm));
        int i = arity - 1;
        while (i >= 0 && t[i] == static_cast<int>(d->points.size()) - 1) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
    }
    return d;
}

bool j_star(const TupleDomain& d, int x, int y, std::uint32_t j_mask) {
    const auto& tx = d.tuples[x];
    const auto& ty = d.tuples[y];
    for (std::size_t i = 0; i < tx.size(); ++i)
        if (!((j_mask >> i) & 1) && tx[i] != ty[i]) return false;
    return true;
}

namespace {

void require_compatible(const FunctionTable& f, const FunctionTable& g) {
    if (f.domain.get() != g.domain.get() || f.codomain.get() != g.codomain.get())
        throw input_error("function tables over different domains or codomains");
}

std::string subset_name(const std::vector<std::string>& indices, std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < indices.size(); ++i)
        if ((mask >> i) & 1) {
            if (!first) s += ',';
            s += indices[i];
            first = false;
        }
    return s + "}";
}

}  // namespace

FunctionTable constant_table(const DomainPtr& d, const OLPtr& codomain, int element) {
    return {d, codomain, std::vector<int>(d->size(), element)};
}

FunctionTable pointwise_meet(const FunctionTable& f, const FunctionTable& g) {
    require_compatible(f, g);
    FunctionTable out{f.domain, f.codomain, std::vector<int>(f.values.size())};
    for (std::size_t x = 0; x < f.values.size(); ++x)
        out.values[x] = f.codomain->meet(f.values[x], g.values[x]);
    return out;
}

FunctionTable pointwise_join(const FunctionTable& f, const FunctionTable& g) {
    require_compatible(f, g);
    FunctionTable out{f.domain, f.codomain, std::vector<int>(f.values.size())};
    for (std::size_t x = 0; x < f.values.size(); ++x)
        out.values[x] = f.codomain->join(f.values[x], g.values[x]);
    return out;
}

FunctionTable pointwise_ortho(const FunctionTable& f) {
    FunctionTable out{f.domain, f.codomain, std::vector<int>(f.values.size())};
    for (std::size_t x = 0; x < f.values.size(); ++x)
        out.values[x] = f.codomain->ortho(f.values[x]);
    return out;
}

FunctionTable diamond(const FunctionTable& f) {
    if (f.values.empty()) throw input_error("diamond over an empty domain");
    int acc = f.values[0];
    for (std::size_t x = 1; x < f.values.size(); ++x) acc = f.codomain->join(acc, f.values[x]);
    return constant_table(f.domain, f.codomain, acc);
}

FunctionTable nabla_hat(const FunctionTable& f, std::uint32_t j_mask) {
    const auto& d = *f.domain;
    FunctionTable out{f.domain, f.codomain, std::vector<int>(f.values.size())};
    for (std::size_t x = 0; x < f.values.size(); ++x) {
        int acc = -1;
        for (std::size_t y = 0; y < f.values.size(); ++y) {
            if (!j_star(d, static_cast<int>(x), static_cast<int>(y), j_mask)) continue;
            acc = acc == -1 ? f.values[y] : f.codomain->join(acc, f.values[y]);
        }
        out.values[x] = acc;
    }
    return out;
}

bool is_independent(const FunctionTable& f, std::uint32_t j_mask) {
    const auto& d = *f.domain;
    for (std::size_t x = 0; x < f.values.size(); ++x)
        for (std::size_t y = x + 1; y < f.values.size(); ++y)
            if (j_star(d, static_cast<int>(x), static_cast<int>(y), j_mask) &&
                f.values[x] != f.values[y])
                return false;
    return true;
}

int FullFunctionalAlgebra::index_of_values(const std::vector<int>& values) const {
    long long idx = 0;
    for (int v : values) idx = idx * base->size() + v;
    return static_cast<int>(idx);
}

std::vector<int> FullFunctionalAlgebra::values_of(int carrier_index) const {
    std::vector<int> values(domain->size());
    long long idx = carrier_index;
    for (std::size_t i = domain->size(); i-- > 0;) {
        values[i] = static_cast<int>(idx % base->size());
        idx /= base->size();
    }
    return values;
}

FunctionTable FullFunctionalAlgebra::table_of(int carrier_index) const {
    return {domain, base, values_of(carrier_index)};
}

const std::vector<int>& FullFunctionalAlgebra::nabla_map(std::uint32_t j_mask) const {
    if (j_mask >= nabla_maps.size() || nabla_maps[j_mask].empty())
        throw input_error("nabla map not materialized for this index subset");
    return nabla_maps[j_mask];
}

namespace {

// Join of f over each equivalence class of "agree outside J", applied to the
// whole carrier at once: points are grouped by their projection outside J.
std::vector<int> precompute_classes(const TupleDomain& d, std::uint32_t j_mask) {
    const std::size_t P = d.size();
    std::vector<int> cls(P, -1);
    int next = 0;
    for (std::size_t x = 0; x < P; ++x) {
        if (cls[x] != -1) continue;
        cls[x] = next;
        for (std::size_t y = x + 1; y < P; ++y)
            if (cls[y] == -1 && j_star(d, static_cast<int>(x), static_cast<int>(y), j_mask))
                cls[y] = next;
        ++next;
    }
    return cls;
}

std::vector<int> materialized_nabla(const FullFunctionalAlgebra& F, const std::vector<int>& cls,
                                    int class_count) {
    const auto& base = *F.base;
    const std::size_t N = F.carrier->size(), P = F.domain->size();
    std::vector<int> map(N);
    std::vector<int> joins;
    for (std::size_t fi = 0; fi < N; ++fi) {
        auto values = F.values_of(static_cast<int>(fi));
        joins.assign(class_count, -1);
        for (std::size_t x = 0; x < P; ++x) {
            int& acc = joins[cls[x]];
            acc = acc == -1 ? values[x] : base.join(acc, values[x]);
        }
        std::vector<int> out(P);
        for (std::size_t x = 0; x < P; ++x) out[x] = joins[cls[x]];
        map[fi] = F.index_of_values(out);
    }
    return map;
}

}  // namespace

FullFunctionalAlgebra build_full_functional(const OLPtr& base, std::vector<std::string> X,
                                            FunctionalKind kind, std::vector<std::string> I,
                                            const RunConfig& cfg, std::size_t cap) {
    if (!check_ortholattice(*base, cfg).pass())
        throw input_error("functional construction needs a valid (complete) base");
    const bool wants_power =
        kind == FunctionalKind::DeltaFreeCoordinatewise || kind == FunctionalKind::SigmaFreePolyadic;
    if (wants_power && I.empty())
        throw input_error("this functional kind needs a non-empty index set");
    if (kind == FunctionalKind::DeltaFreeLiteral && I.empty())
        throw input_error("the literal delta-free kind needs a non-empty index set");
    if (I.size() > 16) throw cap_error("index set too large to materialize");

    FullFunctionalAlgebra F;
    F.base = base;
    F.kind = kind;
    F.index_names = I;
    F.domain = wants_power ? power_domain(std::move(X), I) : plain_domain(std::move(X));

    double size_estimate = 1;
    for (std::size_t i = 0; i < F.domain->size(); ++i) {
        size_estimate *= base->size();
        if (size_estimate > static_cast<double>(cap))
            throw cap_error("carrier of size |" + std::to_string(base->size()) + "|^" +
                            std::to_string(F.domain->size()) + " exceeds the materialization cap " +
                            std::to_string(cap));
    }
    const std::size_t N = static_cast<std::size_t>(size_estimate);
    const std::size_t P = F.domain->size();

    // carrier in odometer order over value vectors
    std::vector<std::string> names(N);
    std::vector<std::vector<int>> all_values(N);
    {
        std::vector<int> v(P, 0);
        for (std::size_t fi = 0;; ++fi) {
            std::string nm = "(";
            for (std::size_t x = 0; x < P; ++x) {
                if (x) nm += ',';
                nm += base->name(v[x]);
            }
            nm += ')';
            names[fi] = std::move(nm);
            all_values[fi] = v;
            std::size_t i = P;
            while (i-- > 0 && v[i] == base->size() - 1) v[i] = 0;
            if (i == static_cast<std::size_t>(-1)) break;
            ++v[i];
        }
    }
    std::vector<Bitset> rows(N, Bitset(N));
    for (std::size_t f = 0; f < N; ++f)
        for (std::size_t g = 0; g < N; ++g) {
            bool le = true;
            for (std::size_t x = 0; x < P && le; ++x)
                le = base->leq(all_values[f][x], all_values[g][x]);
            if (le) rows[f].set(g);
        }
    std::vector<int> ortho(N);
    for (std::size_t f = 0; f < N; ++f) {
        long long idx = 0;
        for (std::size_t x = 0; x < P; ++x)
            idx = idx * base->size() + base->ortho(all_values[f][x]);
        ortho[f] = static_cast<int>(idx);
    }
    F.carrier = std::make_shared<Ortholattice>(std::move(names), std::move(rows), std::move(ortho));

    // diamond: constant at the join of the range
    F.diamond_map.resize(N);
    for (std::size_t f = 0; f < N; ++f) {
        int acc = all_values[f][0];
        for (std::size_t x = 1; x < P; ++x) acc = base->join(acc, all_values[f][x]);
        std::vector<int> cv(P, acc);
        F.diamond_map[f] = F.index_of_values(cv);
    }

    if (wants_power) {
        const std::uint32_t masks = 1u << F.index_names.size();
        F.nabla_maps.resize(masks);
        for (std::uint32_t m = 0; m < masks; ++m) {
            if (kind == FunctionalKind::DeltaFreeCoordinatewise && std::popcount(m) != 1)
                continue;
            auto cls = precompute_classes(*F.domain, m);
            int cc = *std::max_element(cls.begin(), cls.end()) + 1;
            F.nabla_maps[m] = materialized_nabla(F, cls, cc);
        }
    }

    // verification: the construction is a theorem, so a failure here is a bug
    Report& rep = F.verification;
    rep.merge(check_ortholattice(*F.carrier, cfg));
    switch (kind) {
        case FunctionalKind::Monadic:
            rep.merge(check_quantifier(*F.carrier, F.diamond_map, cfg));
            break;
        case FunctionalKind::DeltaFreeLiteral: {
            DeltaFreeCylindric fam{F.carrier, finite_universe(F.index_names), {}};
            for (const auto& i : F.index_names) fam.active.emplace_back(i, F.diamond_map);
            rep.merge(check_family(fam, cfg));
            break;
        }
        case FunctionalKind::DeltaFreeCoordinatewise: {
            DeltaFreeCylindric fam{F.carrier, finite_universe(F.index_names), {}};
            for (std::size_t i = 0; i < F.index_names.size(); ++i)
                fam.active.emplace_back(F.index_names[i], F.nabla_maps[1u << i]);
            rep.merge(check_family(fam, cfg));
            break;
        }
        case FunctionalKind::SigmaFreePolyadic: {
            const std::uint32_t masks = 1u << F.index_names.size();
            for (std::uint32_t m = 0; m < masks; ++m)
                rep.merge(check_quantifier(*F.carrier, F.nabla_maps[m], cfg));
            // condition 1: nabla over the empty subset is the identity
            for (std::size_t f = 0; f < N; ++f)
                if (F.nabla_maps[0][f] != static_cast<int>(f)) {
                    rep.add("nabla-empty-identity", {F.carrier->name(static_cast<int>(f))});
                    break;
                }
            // condition 2: nabla_{J u K} = nabla_J o nabla_K over all subset pairs
            for (std::uint32_t mj = 0; mj < masks; ++mj)
                for (std::uint32_t mk = 0; mk < masks; ++mk) {
                    const auto& u = F.nabla_maps[mj | mk];
                    const auto& nj = F.nabla_maps[mj];
                    const auto& nk = F.nabla_maps[mk];
                    for (std::size_t f = 0; f < N; ++f)
                        if (u[f] != nj[nk[f]]) {
                            rep.add("nabla-union-composition",
                                    {subset_name(F.index_names, mj), subset_name(F.index_names, mk),
                                     F.carrier->name(static_cast<int>(f))});
                            break;
                        }
                }
            break;
        }
    }
    rep.normalize();
    if (!rep.pass())
        throw internal_error("full functional construction failed verification: " +
                             rep.violations.front().law);
    return F;
}

Report check_locally_finite_fun(const FullFunctionalAlgebra& F) {
    Report r;
    if (!F.domain->power()) {
        r.note("plain domain: every table depends on the single implicit coordinate");
        return r;
    }
    const int arity = static_cast<int>(F.index_names.size());
    std::size_t max_dep = 0;
    for (int f = 0; f < F.carrier->size(); ++f) {
        auto table = F.table_of(f);
        std::uint32_t dep = 0;
        for (int i = 0; i < arity; ++i)
            if (!is_independent(table, 1u << i)) dep |= 1u << i;
        // the defining property: independent of the complement of dep
        std::uint32_t co_dep = ~dep & ((1u << arity) - 1);
        if (!is_independent(table, co_dep))
            r.add("finite-support", {F.carrier->name(f)});
        max_dep = std::max(max_dep, static_cast<std::size_t>(std::popcount(dep)));
    }
    r.note("max dependency size " + std::to_string(max_dep) + " of " + std::to_string(arity));
    r.normalize();
    return r;
}

Report check_functional_subalgebra(const std::vector<int>& subset,
                                   const FullFunctionalAlgebra& F) {
    Report r;
    std::vector<char> in(F.carrier->size(), 0);
    for (int s : subset) {
        if (s < 0 || s >= F.carrier->size())
            throw input_error("subset element outside the carrier");
        in[s] = 1;
    }
    const auto& C = *F.carrier;
    if (!in[C.bottom()]) r.add("subalgebra-constants", {C.name(C.bottom())});
    if (!in[C.top()]) r.add("subalgebra-constants", {C.name(C.top())});
    for (int f : subset) {
        if (!in[C.ortho(f)]) r.add("subalgebra-ortho", {C.name(f)});
        for (int g : subset) {
            if (!in[C.meet(f, g)]) r.add("subalgebra-meet", {C.name(f), C.name(g)});
            if (!in[C.join(f, g)]) r.add("subalgebra-join", {C.name(f), C.name(g)});
        }
        if (F.kind == FunctionalKind::Monadic || F.kind == FunctionalKind::DeltaFreeLiteral) {
            if (!in[F.diamond_map[f]]) r.add("subalgebra-diamond", {C.name(f)});
        }
        if (F.kind == FunctionalKind::DeltaFreeCoordinatewise) {
            for (std::size_t i = 0; i < F.index_names.size(); ++i)
                if (!in[F.nabla_maps[1u << i][f]])
                    r.add("subalgebra-nabla", {F.index_names[i], C.name(f)});
        }
        if (F.kind == FunctionalKind::SigmaFreePolyadic) {
            for (std::uint32_t m = 0; m < F.nabla_maps.size(); ++m)
                if (!in[F.nabla_maps[m][f]])
                    r.add("subalgebra-nabla", {subset_name(F.index_names, m), C.name(f)});
        }
    }
    r.normalize();
    return r;
}

namespace {

// Backtracking assignment of carrier images to the elements of M, in element
// order, candidates ascending. Bounds and complements are forced; order in
// both directions, meets, joins, and the quantifier condition are checked
// against every assigned element.
struct EmbedSearcher {
    const MonadicOrtholattice& M;
    const FullFunctionalAlgebra& F;
    std::vector<int> image;      // M index -> carrier index, -1 unassigned
    std::vector<char> used;

    EmbedSearcher(const MonadicOrtholattice& m, const FullFunctionalAlgebra& f)
        : M(m), F(f), image(m.carrier->size(), -1), used(f.carrier->size(), 0) {}

    bool consistent(int a) const {
        const auto& S = *M.carrier;
        const auto& C = *F.carrier;
        int fa = image[a];
        for (int b = 0; b < S.size(); ++b) {
            int fb = image[b];
            if (fb == -1) continue;
            if (S.leq(a, b) != C.leq(fa, fb)) return false;
            if (S.leq(b, a) != C.leq(fb, fa)) return false;
            int m = S.meet(a, b);
            if (image[m] != -1 && C.meet(fa, fb) != image[m]) return false;
            int j = S.join(a, b);
            if (image[j] != -1 && C.join(fa, fb) != image[j]) return false;
        }
        int oa = S.ortho(a);
        if (image[oa] != -1 && image[oa] != C.ortho(fa)) return false;
        int ea = M.exists[a];
        if (image[ea] != -1 && F.diamond_map[fa] != image[ea]) return false;
        // images of closed elements must be diamond-fixed
        if (ea == a && F.diamond_map[fa] != fa) return false;
        return true;
    }

    bool assign(int a, int fa) {
        if (used[fa]) return false;
        image[a] = fa;
        used[fa] = 1;
        if (consistent(a)) return true;
        unassign(a);
        return false;
    }

    void unassign(int a) {
        used[image[a]] = 0;
        image[a] = -1;
    }

    bool search(int a) {
        const auto& S = *M.carrier;
        while (a < S.size() && image[a] != -1) ++a;
        if (a == S.size()) return finish();
        int forced = -1;
        if (image[S.ortho(a)] != -1) forced = F.carrier->ortho(image[S.ortho(a)]);
        if (forced != -1) {
            if (!assign(a, forced)) return false;
            if (search(a + 1)) return true;
            unassign(a);
            return false;
        }
        for (int fa = 0; fa < F.carrier->size(); ++fa) {
            if (!assign(a, fa)) continue;
            if (search(a + 1)) return true;
            unassign(a);
        }
        return false;
    }

    bool finish() const {
        const auto& S = *M.carrier;
        for (int a = 0; a < S.size(); ++a)
            if (F.diamond_map[image[a]] != image[M.exists[a]]) return false;
        return true;
    }
};

}  // namespace

std::optional<EmbedWitness> embed_search(const MonadicOrtholattice& M, const EmbedBounds& bounds,
                                         const RunConfig& cfg) {
    if (bounds.max_base > kEnumerationCap)
        throw cap_error("max_base above the enumeration cap");
    if (bounds.max_points > 6) throw cap_error("max_points above cap 6");
    if (!check_quantifier(*M.carrier, M.exists, cfg).pass())
        throw input_error("embed_search needs a valid monadic structure");

    for (int base_size = 2; base_size <= bounds.max_base; ++base_size) {
        for (const auto& base : enumerate_ortholattices(base_size, cfg)) {
            for (int points = 1; points <= bounds.max_points; ++points) {
                std::vector<std::string> X;
                for (int x = 1; x <= points; ++x) X.push_back("x" + std::to_string(x));
                auto F = std::make_shared<FullFunctionalAlgebra>(
                    build_full_functional(base, X, FunctionalKind::Monadic, {}, cfg));
                if (F->carrier->size() < M.carrier->size()) continue;

                EmbedSearcher searcher(M, *F);
                int bot = M.carrier->bottom(), top = M.carrier->top();
                if (!searcher.assign(bot, F->carrier->bottom())) continue;
                if (!searcher.assign(top, F->carrier->top())) continue;
                if (!searcher.search(0)) continue;

                EmbedWitness w{base, points, F,
                               OrthoHomomorphism{M.carrier, F->carrier, searcher.image}};
                // independent re-verification
                Report hom = check_homomorphism(w.embedding, true);
                Report sub = check_functional_subalgebra(searcher.image, *F);
                bool quantifier_ok = true;
                for (int a = 0; a < M.carrier->size(); ++a)
                    if (F->diamond_map[w.embedding.map[a]] != w.embedding.map[M.exists[a]])
                        quantifier_ok = false;
                if (!hom.pass() || !sub.pass() || !quantifier_ok)
                    throw internal_error("embed_search witness failed re-verification");
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace olkit
