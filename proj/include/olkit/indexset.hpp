#pragma once

#include <string>
#include <vector>

#include "olkit/monadic.hpp"  // IndexUniverse

namespace olkit {

/// Finite-or-cofinite subset of an index universe. Over a finite universe
/// every set normalizes to the finite shape; the cofinite shape only occurs
/// over omega.
struct IndexSet {
    IndexUniversePtr universe;
    bool cofinite = false;
    std::vector<std::string> members;  // the set itself, or its complement
                                       // when cofinite; sorted by index order

    static IndexSet fin(IndexUniversePtr u, std::vector<std::string> elems);
    static IndexSet cofin(IndexUniversePtr u, std::vector<std::string> complement);
    static IndexSet empty(IndexUniversePtr u) { return fin(std::move(u), {}); }
    static IndexSet all(IndexUniversePtr u);

    bool contains(const std::string& token) const;
    /// Cofinite in the universe: always true over a finite universe.
    bool is_cofinite() const { return !universe->omega || cofinite; }
    bool is_empty() const { return !cofinite && members.empty(); }

    std::string to_string() const;

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.cofinite == b.cofinite && a.members == b.members &&
               *a.universe == *b.universe;
    }
};

IndexSet iset_union(const IndexSet& a, const IndexSet& b);
IndexSet iset_intersect(const IndexSet& a, const IndexSet& b);
IndexSet iset_difference(const IndexSet& a, const IndexSet& b);
IndexSet iset_complement(const IndexSet& a);

}  // namespace olkit
