#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "olkit/ortholattice.hpp"

namespace olkit {

/// Lexicographically least encoding of (leq, ortho) over all relabelings.
/// Equal encodings characterize isomorphism.
std::vector<std::uint8_t> canonical_form(const Ortholattice& L);

/// A relabeling achieving the canonical form: position -> original index.
std::vector<int> canonical_labeling(const Ortholattice& L);

/// Copy of L relabeled into canonical order with generated element names
/// ("e0", "e1", ...).
OLPtr canonicalize(const Ortholattice& L);

/// Bijective homomorphism L1 -> L2 when one exists. The witness passes
/// check_homomorphism in both directions.
std::optional<OrthoHomomorphism> is_isomorphic(const OLPtr& L1, const OLPtr& L2);

inline constexpr int kEnumerationCap = 10;

/// All ortholattices with exactly n elements, one per isomorphism class,
/// canonical form ascending. Odd n yields an empty list. Results are cached
/// per size. Throws cap_error above `cap` and input_error below 2.
std::vector<OLPtr> enumerate_ortholattices(int n, const RunConfig& cfg = global_config(),
                                           int cap = kEnumerationCap);

/// Enumeration kernel: canonical encodings of all isomorphism classes of
/// size n, ascending. The parallel variant carves the search tree by its
/// first decisions; both orders are identical.
std::vector<std::vector<std::uint8_t>> enumerate_encodings_serial(int n);
std::vector<std::vector<std::uint8_t>> enumerate_encodings_parallel(int n, int threads);

}  // namespace olkit
