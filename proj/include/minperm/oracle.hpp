#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minperm/caps.hpp"
#include "minperm/minrep.hpp"

namespace minperm {

using OrbitShape = std::vector<std::size_t>;  // descending indices

struct OracleOptions {
  std::size_t class_cap = 5000;
  std::size_t collection_cap = 10000;        // explicit collections listed
  std::uint64_t listing_node_budget = 5'000'000;
  std::optional<std::uint64_t> shuffle_seed;  // permute the class scan order

  static OracleOptions from_caps(const Caps &caps) {
    OracleOptions o;
    o.class_cap = caps.oracle_classes;
    o.collection_cap = caps.listed_collections;
    return o;
  }
};

struct OracleResult {
  std::size_t degree = 0;  // exact d(G)
  Rational delta{0};
  /// Minimal collections built from class representatives, one per set of
  /// conjugacy classes. May be truncated; see collections_complete.
  std::vector<FaithfulCollection> minimal_collections;
  bool collections_complete = true;
  /// Orbit multisets of all minimal collections. Always complete.
  std::set<OrbitShape> orbit_shapes;
  /// Smallest member order over all minimal collections.
  std::size_t smallest_stabilizer_order = 0;
  std::uint64_t nodes_explored = 0;
  std::vector<std::string> notes;
};

/// Exact d(G) by memoized search over conjugacy-class representatives keyed
/// on the remaining relative core. Throws OracleCapExceeded above the class cap.
OracleResult brute_force_min_degree(const Analysis &a, OracleOptions options = {});

/// Independent check: every set of pairwise non-conjugate subgroups with
/// index sum at most |G|, tested for trivial core directly. Exhaustive;
/// throws OracleCapExceeded after `leaf_limit` subsets.
OracleResult subset_enumeration_min_degree(const GroupTable &g, const SubgroupLattice &lattice,
                                           std::uint64_t leaf_limit = 50'000'000);

/// Faithful, of minimal degree, and with pairwise non-conjugate members.
bool is_oracle_minimal(const Analysis &a, const OracleResult &r, const FaithfulCollection &c);

struct MainTheoremReport {
  bool applicable = false;  // nilpotent of odd order
  std::map<std::size_t, unsigned> e_p;
  unsigned expected_orbits = 0;
  std::size_t degree = 0;
  std::set<OrbitShape> shapes;
  bool orbit_count_ok = false;
  bool multiset_invariant = false;
  bool pass() const { return orbit_count_ok && multiset_invariant; }
};

MainTheoremReport verify_main_theorem(const Analysis &a, const OracleResult &r);
MainTheoremReport verify_main_theorem(const GroupTable &g, const Caps &caps = {});

struct CrossCheckReport {
  bool socle_friendly = false;
  std::optional<std::size_t> greedy_degree;
  std::size_t oracle_degree = 0;
  bool degrees_agree = false;
  bool greedy_among_minima = false;
  bool perfect_reachable = false;
  std::size_t perfect_checked = 0;
  std::string note;
  bool pass() const {
    return !socle_friendly || (degrees_agree && greedy_among_minima && perfect_reachable);
  }
};

CrossCheckReport cross_check(const Analysis &a, const OracleResult &r);
CrossCheckReport cross_check(const GroupTable &g, const Caps &caps = {});

}  // namespace minperm
