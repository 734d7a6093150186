#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "olkit/ortholattice.hpp"

namespace olkit {

/// A unary map on a carrier, candidate for the five quantifier axioms.
struct Quantifier {
    OLPtr carrier;
    std::vector<int> emap;

    int apply(int a) const { return emap[a]; }
};

namespace law {
inline constexpr const char* q_additive = "exists-additive";
inline constexpr const char* q_bottom = "exists-bottom";
inline constexpr const char* q_idempotent = "exists-idempotent";
inline constexpr const char* q_increasing = "exists-increasing";
inline constexpr const char* q_closed_complement = "exists-closed-complement";
inline constexpr const char* q_monotone = "exists-monotone";  // derivable
}  // namespace law

Report check_quantifier(const Ortholattice& L, const std::vector<int>& emap,
                        const RunConfig& cfg = global_config());

struct MonadicOrtholattice {
    OLPtr carrier;
    std::vector<int> exists;

    int apply(int a) const { return exists[a]; }
};

/// A carrier subset closed under the operations, with its inclusion map.
struct SubOrtholattice {
    OLPtr algebra;
    OrthoHomomorphism inclusion;     // algebra -> ambient carrier
    std::vector<int> members;        // ambient indices, ascending
};

/// Fixed points of the quantifier as a standalone ortholattice. Requires a
/// valid quantifier (input_error otherwise); a closure failure afterwards is
/// a theorem violation and throws internal_error.
SubOrtholattice closed_elements(const MonadicOrtholattice& M);

struct ForallResult {
    std::vector<int> forall;
    Report report;
};

/// The dual interior operator (forall a := ortho(exists(ortho a))) together
/// with verification of its interior axioms, the duality round trips, and
/// the fact that open elements coincide with closed ones.
ForallResult forall_of(const MonadicOrtholattice& M);

inline constexpr int kQuantifierEnumCap = 8;

/// All maps passing check_quantifier, ascending lexicographic order.
/// Candidates come from sub-ortholattices (every quantifier is determined by
/// its closed set); the brute-force |L|^|L| filter lives in the test suite
/// as the independent oracle.
std::vector<std::vector<int>> enumerate_quantifiers(const Ortholattice& L,
                                                    const RunConfig& cfg = global_config(),
                                                    int cap = kQuantifierEnumCap);

/// Index universe: either an explicit finite set of index names or the
/// symbolic countably infinite universe (indices are decimal naturals).
struct IndexUniverse {
    bool omega = false;
    std::vector<std::string> names;  // finite case only

    bool contains(const std::string& token) const;
    bool token_less(const std::string& a, const std::string& b) const;
    bool operator==(const IndexUniverse& o) const {
        return omega == o.omega && names == o.names;
    }
};

using IndexUniversePtr = std::shared_ptr<const IndexUniverse>;

IndexUniversePtr finite_universe(std::vector<std::string> names);
IndexUniversePtr omega_universe();

/// Family of quantifiers at finitely many active indices; every other index
/// of the universe carries the identity quantifier.
struct DeltaFreeCylindric {
    OLPtr carrier;
    IndexUniversePtr universe;
    std::vector<std::pair<std::string, std::vector<int>>> active;  // sorted by index

    const std::vector<int>* find_active(const std::string& index) const;
    /// exists_i; identity for non-active indices.
    int apply(const std::string& index, int a) const;
};

struct CylindricOrtholattice {
    DeltaFreeCylindric family;
    /// diagonal elements, keyed by unordered index pair (stored both ways)
    std::map<std::pair<std::string, std::string>, int> diagonals;

    int diagonal(const std::string& i, const std::string& k) const;
};

namespace law {
inline constexpr const char* commutation = "commutation";
inline constexpr const char* diagonal_symmetry = "diagonal-symmetry";
inline constexpr const char* diagonal_identity = "diagonal-identity";
inline constexpr const char* diagonal_composition = "diagonal-composition";
}  // namespace law

/// Checks every active quantifier and all pairwise commutations (active
/// indices plus one identity representative over omega). Quantifier
/// violations carry the index as the first witness entry.
Report check_family(const DeltaFreeCylindric& S, const RunConfig& cfg = global_config());

/// As check_family, plus both diagonal axioms. Throws input_error when the
/// diagonal map is not total over active index pairs.
Report check_family(const CylindricOrtholattice& S, const RunConfig& cfg = global_config());

/// Recomputes S_a = {j : exists_j a = a} from the maps for every element and
/// verifies cofiniteness. Notes carry the computed sets.
Report check_locally_finite_cyl(const DeltaFreeCylindric& S);

}  // namespace olkit
