#pragma once

#include <optional>
#include <vector>

#include "olkit/frames.hpp"
#include "olkit/monadic.hpp"
#include "olkit/ortholattice.hpp"

namespace olkit {

/// Two embeddings of a common base into a left and a right algebra.
struct VFormation {
    OLPtr base, left, right;
    OrthoHomomorphism phi1;  // base -> left
    OrthoHomomorphism phi2;  // base -> right
};

/// Checks carriers line up and both legs are embeddings.
Report check_vformation(const VFormation& V);

/// A candidate completion of the square.
struct AmalgamCertificate {
    OLPtr target;
    OrthoHomomorphism psi1;  // left -> target
    OrthoHomomorphism psi2;  // right -> target
    bool super = false;
};

namespace law {
inline constexpr const char* square_commutes = "square-commutes";
inline constexpr const char* super_lr = "super-interpolation-lr";
inline constexpr const char* super_rl = "super-interpolation-rl";
}  // namespace law

/// Target laws, both embeddings, and the commuting square.
Report verify_amalgam(const VFormation& V, const AmalgamCertificate& cert,
                      const RunConfig& cfg = global_config());

/// verify_amalgam plus the interpolation condition: whenever images compare
/// across the two legs, some base element interpolates.
Report verify_super(const VFormation& V, const AmalgamCertificate& cert,
                    const RunConfig& cfg = global_config());

struct FindOptions {
    int max_size = 16;
    bool require_super = false;
    int enum_cap = kEnumerationCap;  // enumerated candidates up to min(this, max_size)
};

/// Bounded search: candidate targets ascending by size (enumerated canonical
/// list, then the direct product, then the bound-glued sum at their sizes),
/// embedding pairs by lexicographic backtracking. A returned certificate has
/// been re-verified; nullopt means the bound was exhausted, never
/// non-existence.
std::optional<AmalgamCertificate> find_amalgam(const VFormation& V, const FindOptions& opts,
                                               const RunConfig& cfg = global_config());

/// Direct product with componentwise operations; elements named "(x|y)".
OLPtr direct_product(const Ortholattice& L, const Ortholattice& R);

/// Horizontal sum: disjoint middles over shared bounds, elements named
/// "L:x" / "R:y" with bounds "0" / "1".
OLPtr glued_sum(const Ortholattice& L, const Ortholattice& R);

/// One stage of the recursive super-amalgamation chain.
struct ChainStage {
    int index = 0;
    OLPtr algebra;           // A_n
    OrthoHomomorphism f;     // stage 0: A -> A_0; later: A_{n-1} -> A_n
    OrthoHomomorphism g;     // A -> A_n
    OrthoHomomorphism h;     // B -> A_n
    AmalgamCertificate cert; // provenance
};

struct Chain {
    MonadicOrtholattice source;  // A with its quantifier
    SubOrtholattice closed;      // B
    std::vector<ChainStage> stages;
    bool complete = true;
    int failed_stage = -1;
};

/// Builds stages 0..count (count super-amalgamation steps beyond stage 0,
/// which is itself one). On bound exhaustion returns the partial chain with
/// the failing stage identified.
Chain build_chain(const MonadicOrtholattice& M, int count, int max_size,
                  const RunConfig& cfg = global_config());

/// Stage certificates re-verified and the defining identities
/// h_n = f_n o h_{n-1} (= f_0|B at stage 0) and h_n = g_n|B.
Report check_chain_structure(const Chain& chain, const RunConfig& cfg = global_config());

/// Finite-stage forms of the directed-limit lemmas, evaluated inside the
/// final stage A_N with d_n the composite of the connecting embeddings:
/// (i) d_m(g_m(a)) is constant over stages for closed a, (ii) the image of
/// exists a bounds {d_n(g_n(a))} from above, (iii) it is least among bounds
/// of the form d_m(b), and (iv) the duals for forall.
Report check_limit_lemmas(const Chain& chain, const RunConfig& cfg = global_config());

/// Builds a |-> (n |-> i(d_n(g_n(a)))) into the function space over the
/// MacNeille completion of A_N with X = {0..N} and verifies it is an
/// ortholattice embedding satisfying f(exists a) = diamond(f(a)).
Report functional_witness_from_chain(const Chain& chain, const RunConfig& cfg = global_config());

}  // namespace olkit
