#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "olkit/bitset.hpp"
#include "olkit/parallel.hpp"
#include "olkit/report.hpp"

namespace olkit {

class Ortholattice;
using OLPtr = std::shared_ptr<const Ortholattice>;

/// A finite carrier with an order relation and a unary complement candidate.
/// Construction performs no law checking beyond structural sanity; run
/// check_ortholattice to find out whether the data is an ortholattice.
/// Instances are immutable and safe to share across threads.
class Ortholattice {
public:
    /// Name-level constructor used by the file format. `leq_pairs` may list
    /// covers or the full relation; the reflexive-transitive closure is taken.
    /// Throws input_error on duplicate names, dangling references, or a
    /// non-total complement map.
    Ortholattice(std::vector<std::string> elements,
                 const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                 const std::vector<std::pair<std::string, std::string>>& ortho_pairs);

    /// Index-level constructor for algorithmic builders and mutation tests.
    /// Rows are taken verbatim (no closure): row a holds {b : a <= b}.
    Ortholattice(std::vector<std::string> elements,
                 std::vector<Bitset> up_rows,
                 std::vector<int> ortho);

    Ortholattice(const Ortholattice& o)
        : names_(o.names_), index_(o.index_), up_(o.up_), down_(o.down_),
          ortho_(o.ortho_), down_count_(o.down_count_), up_count_(o.up_count_),
          bottom_(o.bottom_), top_(o.top_) {}  // memo tables rebuilt on demand
    Ortholattice& operator=(const Ortholattice&) = delete;

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& element_names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }

    /// Index of a named element; throws input_error when unknown.
    int index_of(const std::string& name) const;
    /// Index of a named element; -1 when unknown.
    int find(const std::string& name) const;

    bool leq(int a, int b) const { return up_[a].test(b); }
    int ortho(int a) const { return ortho_[a]; }

    int bottom() const { return bottom_; }  // -1 when no global least
    int top() const { return top_; }

    /// Greatest lower bound under leq, -1 when none exists.
    int meet(int a, int b) const;
    /// Least upper bound under leq, -1 when none exists.
    int join(int a, int b) const;

    const Bitset& up_set(int a) const { return up_[a]; }
    const Bitset& down_set(int a) const { return down_[a]; }

    /// Meet/join of an element subset given as a bitmask; empty set folds to
    /// top/bottom respectively. -1 propagates.
    int meet_all(const Bitset& s) const;
    int join_all(const Bitset& s) const;

    bool same_carrier_as(const Ortholattice& o) const { return this == &o; }

private:
    void init_derived();
    int meet_raw(int a, int b) const;
    int join_raw(int a, int b) const;
    void ensure_tables() const;

    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<Bitset> up_;     // up_[a] = {b : a <= b}
    std::vector<Bitset> down_;   // down_[a] = {b : b <= a}
    std::vector<int> ortho_;
    std::vector<int> down_count_, up_count_;
    int bottom_ = -1, top_ = -1;

    // meet/join tables, memoized on first use for small carriers
    mutable std::once_flag table_once_;
    mutable std::vector<int> meet_table_, join_table_;
    mutable bool tables_built_ = false;
};

/// Names used in violation reports, in checking order.
namespace law {
inline constexpr const char* reflexivity = "reflexivity";
inline constexpr const char* antisymmetry = "antisymmetry";
inline constexpr const char* transitivity = "transitivity";
inline constexpr const char* bottom = "bottom";
inline constexpr const char* top = "top";
inline constexpr const char* glb_exists = "glb-exists";
inline constexpr const char* lub_exists = "lub-exists";
inline constexpr const char* involution = "involution";
inline constexpr const char* order_reversal = "order-reversal";
inline constexpr const char* complement_meet = "complement-meet";
inline constexpr const char* complement_join = "complement-join";
inline constexpr const char* de_morgan = "de-morgan";
}  // namespace law

/// Evaluates every ortholattice law over all elements/pairs. If the order
/// relation itself is broken (reflexivity, antisymmetry, transitivity) only
/// those failures are reported, since bounds and complements are undefined
/// over a non-order.
Report check_ortholattice(const Ortholattice& L, const RunConfig& cfg = global_config());

/// A total element map between two carriers.
struct OrthoHomomorphism {
    OLPtr source;
    OLPtr target;
    std::vector<int> map;  // source index -> target index

    int apply(int a) const { return map[a]; }
    int apply_name(const std::string& n) const;
};

OrthoHomomorphism identity_homomorphism(const OLPtr& L);

/// Composition g o f (f first). Carriers must chain.
OrthoHomomorphism compose(const OrthoHomomorphism& f, const OrthoHomomorphism& g);

namespace law {
inline constexpr const char* hom_meet = "meet-preserved";
inline constexpr const char* hom_join = "join-preserved";
inline constexpr const char* hom_ortho = "ortho-preserved";
inline constexpr const char* hom_bottom = "bottom-preserved";
inline constexpr const char* hom_top = "top-preserved";
inline constexpr const char* hom_injective = "injectivity";
}  // namespace law

/// Checks operation preservation; with embedding_required also injectivity.
/// Throws input_error if the map is not total or leaves the target carrier.
Report check_homomorphism(const OrthoHomomorphism& h, bool embedding_required);

}  // namespace olkit
