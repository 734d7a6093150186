#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "olkit/monadic.hpp"
#include "olkit/ortholattice.hpp"

namespace olkit {

/// Domain of a function table: either a plain point set X, or the tuple
/// space X^I materialized in odometer order (last index fastest).
struct TupleDomain {
    std::vector<std::string> points;          // X
    std::vector<std::string> indices;         // I; empty = plain domain
    std::vector<std::vector<int>> tuples;     // index position -> point position
    std::vector<std::string> names;           // one per domain element

    std::size_t size() const { return names.size(); }
    bool power() const { return !indices.empty(); }
};

using DomainPtr = std::shared_ptr<const TupleDomain>;

DomainPtr plain_domain(std::vector<std::string> points);
DomainPtr power_domain(std::vector<std::string> points, std::vector<std::string> indices);

/// x J* y : the tuples agree on every index outside J (J as index-position mask).
bool j_star(const TupleDomain& d, int x, int y, std::uint32_t j_mask);

/// Total map from a domain into a carrier.
struct FunctionTable {
    DomainPtr domain;
    OLPtr codomain;
    std::vector<int> values;

    bool operator==(const FunctionTable& o) const { return values == o.values; }
};

FunctionTable constant_table(const DomainPtr& d, const OLPtr& codomain, int element);
FunctionTable pointwise_meet(const FunctionTable& f, const FunctionTable& g);
FunctionTable pointwise_join(const FunctionTable& f, const FunctionTable& g);
FunctionTable pointwise_ortho(const FunctionTable& f);

/// The constant table at the join of the range of f. Empty domains refused.
FunctionTable diamond(const FunctionTable& f);

/// Value at x is the join of f over the J*-class of x.
FunctionTable nabla_hat(const FunctionTable& f, std::uint32_t j_mask);

/// f is independent of J when it is constant on every J*-class.
bool is_independent(const FunctionTable& f, std::uint32_t j_mask);

enum class FunctionalKind {
    Monadic,                 // A^X with one diamond
    DeltaFreeLiteral,        // A^X, every index carries the same diamond
    DeltaFreeCoordinatewise, // A^{X^I}, index i carries nabla_{{i}}
    SigmaFreePolyadic,       // A^{X^I} with nabla_J for every J
};

inline constexpr std::size_t kMaterializeCap = 20000;

/// A fully materialized functional algebra. The carrier lists all |A|^|X|
/// (or |A|^{|X|^|I|}) tables in odometer order, so a value vector converts
/// to its carrier index by mixed-radix arithmetic.
struct FullFunctionalAlgebra {
    OLPtr base;
    DomainPtr domain;
    FunctionalKind kind;
    OLPtr carrier;
    std::vector<int> diamond_map;             // Monadic / DeltaFreeLiteral
    std::vector<std::vector<int>> nabla_maps; // per J mask; singleton masks only
                                              // for the coordinatewise kind
    std::vector<std::string> index_names;     // I (delta-free and polyadic kinds)
    Report verification;

    int index_of_values(const std::vector<int>& values) const;
    std::vector<int> values_of(int carrier_index) const;
    FunctionTable table_of(int carrier_index) const;
    const std::vector<int>& nabla_map(std::uint32_t j_mask) const;
};

/// Materializes the carrier and re-verifies the laws of the requested kind
/// on it (ortholattice laws, quantifier axioms for the diamond maps, family
/// commutation, and the two sigma-free conditions over all subset pairs).
/// Throws cap_error when |base|^|domain| exceeds `cap` and internal_error if
/// verification fails (it is a theorem).
FullFunctionalAlgebra build_full_functional(const OLPtr& base, std::vector<std::string> X,
                                            FunctionalKind kind,
                                            std::vector<std::string> I = {},
                                            const RunConfig& cfg = global_config(),
                                            std::size_t cap = kMaterializeCap);

/// Recomputes, for every carrier element, the set of coordinates it depends
/// on and confirms each is independent of the complement.
Report check_locally_finite_fun(const FullFunctionalAlgebra& F);

/// Closure of a carrier subset under the operations of F's kind (constants,
/// pointwise operations, and the diamond/nabla maps).
Report check_functional_subalgebra(const std::vector<int>& subset,
                                   const FullFunctionalAlgebra& F);

struct EmbedWitness {
    OLPtr base;    // A'
    int points;    // |X|
    std::shared_ptr<FullFunctionalAlgebra> algebra;
    OrthoHomomorphism embedding;  // M.carrier -> algebra->carrier
};

struct EmbedBounds {
    int max_base = 4;
    int max_points = 3;
};

/// Bounded search for a functional representation of M: bases from
/// enumerate_ortholattices in canonical order, point counts ascending,
/// image assignments in lexicographic order. A returned witness satisfies
/// h(exists a) = diamond(h(a)) and re-verifies through check_homomorphism
/// and check_functional_subalgebra. nullopt means the bound was exhausted,
/// never that no representation exists.
std::optional<EmbedWitness> embed_search(const MonadicOrtholattice& M, const EmbedBounds& bounds,
                                         const RunConfig& cfg = global_config());

}  // namespace olkit
