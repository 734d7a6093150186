#include "olkit/indexset.hpp"

#include <algorithm>

namespace olkit {

namespace {

std::vector<std::string> normalize(const IndexUniverse& u, std::vector<std::string> elems) {
    for (const auto& e : elems)
        if (!u.contains(e)) throw input_error("index outside the universe: " + e);
    std::sort(elems.begin(), elems.end(),
              [&](const std::string& a, const std::string& b) { return u.token_less(a, b); });
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

std::vector<std::string> set_union(const IndexUniverse& u, const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return normalize(u, std::move(out));
}

std::vector<std::string> set_intersect(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
    std::vector<std::string> out;
    for (const auto& x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
    return out;
}

std::vector<std::string> set_minus(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
    std::vector<std::string> out;
    for (const auto& x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
    return out;
}

void require_same_universe(const IndexSet& a, const IndexSet& b) {
    if (!(*a.universe == *b.universe)) throw input_error("index sets over different universes");
}

}  // namespace

IndexSet IndexSet::fin(IndexUniversePtr u, std::vector<std::string> elems) {
    IndexSet s;
    s.members = normalize(*u, std::move(elems));
    s.universe = std::move(u);
    s.cofinite = false;
    return s;
}

IndexSet IndexSet::cofin(IndexUniversePtr u, std::vector<std::string> complement) {
    if (!u->omega) {
        // over a finite universe the cofinite shape normalizes away
        auto excl = normalize(*u, std::move(complement));
        auto rest = set_minus(u->names, excl);
        return fin(std::move(u), std::move(rest));
    }
    IndexSet s;
    s.members = normalize(*u, std::move(complement));
    s.universe = std::move(u);
    s.cofinite = true;
    return s;
}

IndexSet IndexSet::all(IndexUniversePtr u) {
    if (u->omega) return cofin(std::move(u), {});
    auto names = u->names;
    return fin(std::move(u), std::move(names));
}

bool IndexSet::contains(const std::string& token) const {
    if (!universe->contains(token)) return false;
    bool listed = std::find(members.begin(), members.end(), token) != members.end();
    return cofinite ? !listed : listed;
}

std::string IndexSet::to_string() const {
    std::string s = cofinite ? "CoFin{" : "Fin{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) s += ',';
        s += members[i];
    }
    return s + "}";
}

IndexSet iset_union(const IndexSet& a, const IndexSet& b) {
    require_same_universe(a, b);
    const auto& u = *a.universe;
    if (!a.cofinite && !b.cofinite)
        return IndexSet::fin(a.universe, set_union(u, a.members, b.members));
    if (a.cofinite && b.cofinite)
        return IndexSet::cofin(a.universe, set_intersect(a.members, b.members));
    const IndexSet& co = a.cofinite ? a : b;
    const IndexSet& fi = a.cofinite ? b : a;
    return IndexSet::cofin(a.universe, set_minus(co.members, fi.members));
}

IndexSet iset_intersect(const IndexSet& a, const IndexSet& b) {
    require_same_universe(a, b);
    const auto& u = *a.universe;
    if (!a.cofinite && !b.cofinite)
        return IndexSet::fin(a.universe, set_intersect(a.members, b.members));
    if (a.cofinite && b.cofinite)
        return IndexSet::cofin(a.universe, set_union(u, a.members, b.members));
    const IndexSet& co = a.cofinite ? a : b;
    const IndexSet& fi = a.cofinite ? b : a;
    return IndexSet::fin(a.universe, set_minus(fi.members, co.members));
}

IndexSet iset_complement(const IndexSet& a) {
    if (!a.universe->omega)
        return IndexSet::fin(a.universe, set_minus(a.universe->names, a.members));
    return a.cofinite ? IndexSet::fin(a.universe, a.members)
                      : IndexSet::cofin(a.universe, a.members);
}

IndexSet iset_difference(const IndexSet& a, const IndexSet& b) {
    return iset_intersect(a, iset_complement(b));
}

}  // namespace olkit
