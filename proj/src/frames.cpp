#include "olkit/frames.hpp"

#include <algorithm>
#include <bit>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace olkit {

int OrthoFrame::point_index(const std::string& name) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == name) return static_cast<int>(i);
    throw input_error("unknown point identifier: " + name);
}

Report check_frame(const OrthoFrame& F) {
    Report r;
    const int p = static_cast<int>(F.points.size());
    for (int a = 0; a < p; ++a) {
        if (F.perp[a].test(a)) r.add(law::perp_irreflexive, {F.points[a]});
        for (int b = a + 1; b < p; ++b)
            if (F.perp[a].test(b) != F.perp[b].test(a))
                r.add(law::perp_symmetric, {F.points[a], F.points[b]});
    }
    r.normalize();
    return r;
}

Bitset perp_set(const OrthoFrame& F, const Bitset& U) {
    Bitset acc(F.points.size());
    acc.fill();
    U.for_each([&](std::size_t b) { acc &= F.perp[b]; });
    return acc;
}

std::vector<std::string> perp_set(const OrthoFrame& F, const std::vector<std::string>& U) {
    Bitset u(F.points.size());
    for (const auto& name : U) u.set(F.point_index(name));
    Bitset res = perp_set(F, u);
    std::vector<std::string> out;
    res.for_each([&](std::size_t i) { out.push_back(F.points[i]); });
    return out;
}

OrthoFrame frame_of(const Ortholattice& L) {
    if (!check_ortholattice(L).pass())
        throw input_error("frame_of needs a valid ortholattice");
    OrthoFrame F;
    std::vector<int> carrier;  // frame point -> carrier index
    for (int a = 0; a < L.size(); ++a)
        if (a != L.bottom()) {
            F.points.push_back(L.name(a));
            carrier.push_back(a);
        }
    const int p = static_cast<int>(F.points.size());
    F.perp.assign(p, Bitset(p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (L.leq(carrier[i], L.ortho(carrier[j]))) F.perp[i].set(j);
    if (!check_frame(F).pass())
        throw internal_error("frame_of produced an invalid orthoframe");
    return F;
}

namespace {

std::uint32_t perp_mask(const std::vector<std::uint32_t>& perp, std::uint32_t full,
                        std::uint32_t u) {
    std::uint32_t acc = full;
    while (u) {
        int b = std::countr_zero(u);
        u &= u - 1;
        acc &= perp[b];
    }
    return acc;
}

std::vector<std::uint32_t> perp_rows_as_masks(const OrthoFrame& F) {
    std::vector<std::uint32_t> rows(F.points.size(), 0);
    for (std::size_t a = 0; a < F.points.size(); ++a)
        F.perp[a].for_each([&](std::size_t b) { rows[a] |= 1u << b; });
    return rows;
}

}  // namespace

std::vector<std::uint32_t> biclosed_masks_serial(const OrthoFrame& F) {
    const int p = static_cast<int>(F.points.size());
    const std::uint32_t full = p == 32 ? ~0u : (1u << p) - 1;
    auto rows = perp_rows_as_masks(F);
    std::vector<std::uint32_t> closed;
    for (std::uint64_t u = 0; u <= full; ++u) {
        auto m = static_cast<std::uint32_t>(u);
        if (perp_mask(rows, full, perp_mask(rows, full, m)) == m) closed.push_back(m);
    }
    return closed;
}

std::vector<std::uint32_t> biclosed_masks_parallel(const OrthoFrame& F, int threads) {
    const int p = static_cast<int>(F.points.size());
    const std::uint32_t full = p == 32 ? ~0u : (1u << p) - 1;
    auto rows = perp_rows_as_masks(F);
    const std::int64_t total = static_cast<std::int64_t>(full) + 1;
    std::vector<std::vector<std::uint32_t>> parts;
    const int nt = threads > 0 ? threads : resolved_threads(RunConfig{});
    parts.resize(nt);
#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
#endif
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        const std::int64_t lo = total * tid / nt, hi = total * (tid + 1) / nt;
        for (std::int64_t u = lo; u < hi; ++u) {
            auto m = static_cast<std::uint32_t>(u);
            if (perp_mask(rows, full, perp_mask(rows, full, m)) == m)
                parts[tid].push_back(m);
        }
    }
    std::vector<std::uint32_t> closed;  // block ranges are ascending already
    for (auto& part : parts) closed.insert(closed.end(), part.begin(), part.end());
    return closed;
}

OLPtr biclosed_sets(const OrthoFrame& F, const RunConfig& cfg, int cap) {
    const int p = static_cast<int>(F.points.size());
    if (p > cap)
        throw cap_error("frame has " + std::to_string(p) + " points, above cap " +
                        std::to_string(cap));
    if (!check_frame(F).pass()) throw input_error("invalid orthoframe");

    auto closed = cfg.serial() ? biclosed_masks_serial(F)
                               : biclosed_masks_parallel(F, resolved_threads(cfg));
    auto rows_mask = perp_rows_as_masks(F);
    const std::uint32_t full = p == 32 || p == 0 ? (p ? ~0u : 0u) : (1u << p) - 1;

    std::map<std::uint32_t, int> position;
    for (std::size_t i = 0; i < closed.size(); ++i)
        position[closed[i]] = static_cast<int>(i);

    const int n = static_cast<int>(closed.size());
    std::vector<std::string> names(n);
    std::vector<Bitset> up(n, Bitset(n));
    std::vector<int> ortho(n);
    for (int i = 0; i < n; ++i) {
        std::string nm = "{";
        bool first = true;
        for (int b = 0; b < p; ++b)
            if ((closed[i] >> b) & 1) {
                if (!first) nm += ',';
                nm += F.points[b];
                first = false;
            }
        nm += '}';
        names[i] = std::move(nm);
        for (int j = 0; j < n; ++j)
            if ((closed[i] & ~closed[j]) == 0) up[i].set(j);
        auto it = position.find(perp_mask(rows_mask, full, closed[i]));
        if (it == position.end())
            throw internal_error("perp of a closed set is not closed");
        ortho[i] = it->second;
    }
    return std::make_shared<Ortholattice>(std::move(names), std::move(up), std::move(ortho));
}

Completion macneille(const OLPtr& L, const RunConfig& cfg, int cap) {
    OrthoFrame F = frame_of(*L);
    OLPtr completion = biclosed_sets(F, cfg, cap);

    // point b of the frame corresponds to the nonzero carrier elements in order
    std::vector<int> carrier_of_point;
    for (int a = 0; a < L->size(); ++a)
        if (a != L->bottom()) carrier_of_point.push_back(a);

    OrthoHomomorphism embed{L, completion, std::vector<int>(L->size())};
    for (int a = 0; a < L->size(); ++a) {
        std::string nm = "{";
        bool first = true;
        for (std::size_t b = 0; b < carrier_of_point.size(); ++b)
            if (L->leq(carrier_of_point[b], a)) {
                if (!first) nm += ',';
                nm += F.points[b];
                first = false;
            }
        nm += '}';
        int idx = completion->find(nm);
        if (idx == -1)
            throw internal_error("down-set of " + L->name(a) + " is not bi-orthogonally closed");
        embed.map[a] = idx;
    }
    return {completion, std::move(embed)};
}

Report check_completion(const Completion& c, const RunConfig& cfg) {
    const auto& S = *c.embed.source;
    const auto& T = *c.completion;
    if (c.embed.target.get() != &T)
        throw input_error("completion and embedding target disagree");
    if (S.size() > 16)
        throw cap_error("completion check enumerates all 2^|source| subsets; source too large");

    Report r = check_homomorphism(c.embed, true);

    // density: every completion element is a meet and a join of image elements
    for (int t = 0; t < T.size(); ++t) {
        Bitset above(T.size()), below(T.size());
        for (int a = 0; a < S.size(); ++a) {
            if (T.leq(t, c.embed.map[a])) above.set(c.embed.map[a]);
            if (T.leq(c.embed.map[a], t)) below.set(c.embed.map[a]);
        }
        if (T.meet_all(above) != t) r.add(law::meet_dense, {T.name(t)});
        if (T.join_all(below) != t) r.add(law::join_dense, {T.name(t)});
    }

    // regularity at finite scale: all subset meets and joins are preserved
    const std::uint32_t full = S.size() == 0 ? 0 : (S.size() == 32 ? ~0u : (1u << S.size()) - 1);
    auto subset_check = [&](std::uint32_t mask) {
        Bitset src(S.size()), img(T.size());
        std::vector<std::string> witness;
        for (int a = 0; a < S.size(); ++a)
            if ((mask >> a) & 1) {
                src.set(a);
                img.set(c.embed.map[a]);
                witness.push_back(S.name(a));
            }
        int sm = S.meet_all(src), sj = S.join_all(src);
        if (sm != -1 && c.embed.map[sm] != T.meet_all(img))
            r.add(law::meets_preserved, witness);
        if (sj != -1 && c.embed.map[sj] != T.join_all(img))
            r.add(law::joins_preserved, witness);
    };
    for (std::uint64_t mask = 0; mask <= full; ++mask)
        subset_check(static_cast<std::uint32_t>(mask));
    (void)cfg;
    r.normalize();
    return r;
}

}  // namespace olkit
