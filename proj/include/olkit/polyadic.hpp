#pragma once

#include <map>
#include <string>
#include <vector>

#include "olkit/indexset.hpp"
#include "olkit/monadic.hpp"

namespace olkit {

/// Subset-indexed quantifier family in generated form: finitely many
/// generating quantifiers at named indices, identity everywhere else.
/// nabla over an arbitrary finite-or-cofinite subset evaluates through the
/// generators that move the argument.
struct SigmaFreePolyadic {
    OLPtr carrier;
    IndexUniversePtr universe;
    std::vector<std::pair<std::string, std::vector<int>>> generators;  // sorted by index

    const std::vector<int>* find_generator(const std::string& index) const;
};

/// nabla_J a: composes, in ascending index order, the generators at indices
/// of J that move a (J minus S_a is finite by construction). J = empty set
/// returns a.
int nabla_eval(const SigmaFreePolyadic& P, const IndexSet& J, int a);

namespace law {
inline constexpr const char* nabla_empty = "nabla-empty-identity";
inline constexpr const char* nabla_union = "nabla-union-composition";
inline constexpr const char* nabla_quantifier_prefix = "nabla";  // per-set quantifier axioms
}  // namespace law

/// Both sigma-free conditions plus the quantifier axioms of the evaluated
/// maps. Finite universes are checked over every subset pair; omega over all
/// Fin/CoFin sets built from the active indices plus one fresh index, plus
/// seeded random samples (seed and counts from the RunConfig, recorded in
/// the report notes).
Report check_sigma_free(const SigmaFreePolyadic& P, const RunConfig& cfg = global_config());

/// Least finite J with nabla over the complement of J fixing a; equals the
/// set of generator indices that move a. The defining equation is re-checked
/// by evaluation.
IndexSet support_of(const SigmaFreePolyadic& P, int a);

/// The polyadic structure induced by a commuting locally finite family.
/// Refuses non-commuting families (the composition order would be
/// ill-defined).
SigmaFreePolyadic cyl_to_pol(const DeltaFreeCylindric& C, const RunConfig& cfg = global_config());

/// exists_i := nabla_{{i}}; verifies commutation and local finiteness.
DeltaFreeCylindric pol_to_cyl(const SigmaFreePolyadic& P, const RunConfig& cfg = global_config());

/// The bijection at the level of maps: exists_j = nabla_{{j}} = exists-hat_j
/// for every element and active index, where exists-hat comes from the
/// round trip through both conversions.
Report roundtrip_check(const DeltaFreeCylindric& C, const RunConfig& cfg = global_config());

/// Accepts explicit finite-universe nabla tables (keyed by comma-joined
/// index subsets, "" for the empty set) if and only if they are generated by
/// their singletons; rejects with a diagnostic otherwise.
SigmaFreePolyadic from_explicit_tables(const OLPtr& carrier, const IndexUniversePtr& universe,
                                       const std::map<std::string, std::vector<int>>& tables);

}  // namespace olkit
