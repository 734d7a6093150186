#pragma once

#include <string>
#include <vector>

#include "olkit/ortholattice.hpp"

namespace olkit {

/// A point set with an orthogonality relation (irreflexive, symmetric).
struct OrthoFrame {
    std::vector<std::string> points;
    std::vector<Bitset> perp;  // perp[a] = {b : a _|_ b}

    int point_index(const std::string& name) const;  // input_error when unknown
};

namespace law {
inline constexpr const char* perp_irreflexive = "perp-irreflexive";
inline constexpr const char* perp_symmetric = "perp-symmetric";
}  // namespace law

Report check_frame(const OrthoFrame& F);

/// U^perp = { a : a _|_ b for all b in U }.
Bitset perp_set(const OrthoFrame& F, const Bitset& U);
std::vector<std::string> perp_set(const OrthoFrame& F, const std::vector<std::string>& U);

/// MacLaren frame of an ortholattice: points are the nonzero elements,
/// a _|_ b iff a <= ortho(b). Requires a valid ortholattice.
OrthoFrame frame_of(const Ortholattice& L);

inline constexpr int kFramePointCap = 16;

/// The complete ortholattice of bi-orthogonally closed subsets, ordered by
/// inclusion, with set complement U -> U^perp and join (U u V)^perpperp.
/// Elements are named "{p1,p2,...}" in point order. Refuses frames with more
/// than `cap` points.
OLPtr biclosed_sets(const OrthoFrame& F, const RunConfig& cfg = global_config(),
                    int cap = kFramePointCap);

/// Kernel shared by biclosed_sets: the closed subsets as point masks,
/// ascending. Serial reference and OpenMP variants produce identical output.
std::vector<std::uint32_t> biclosed_masks_serial(const OrthoFrame& F);
std::vector<std::uint32_t> biclosed_masks_parallel(const OrthoFrame& F, int threads);

struct Completion {
    OLPtr completion;
    OrthoHomomorphism embed;  // source -> completion
};

/// MacNeille completion via the frame construction; embed(a) is the set of
/// nonzero elements below a.
Completion macneille(const OLPtr& L, const RunConfig& cfg = global_config(),
                     int cap = kFramePointCap);

namespace law {
inline constexpr const char* meet_dense = "meet-density";
inline constexpr const char* join_dense = "join-density";
inline constexpr const char* meets_preserved = "subset-meet-preserved";
inline constexpr const char* joins_preserved = "subset-join-preserved";
}  // namespace law

/// Verifies the embedding laws, meet/join density, and preservation of the
/// meets and joins of every subset of the (finite) source. Sources above 16
/// elements are refused (2^|L| subsets).
Report check_completion(const Completion& c, const RunConfig& cfg = global_config());

}  // namespace olkit
