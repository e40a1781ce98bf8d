#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "minperm/rational.hpp"
#include "minperm/socle.hpp"

namespace minperm {

/// A collection of subgroups viewed as the point stabilizers of a G-set, one
/// per orbit.
struct FaithfulCollection {
  std::vector<Subgroup> members;
  std::size_t degree = 0;                 // sum of indices
  Rational delta{0};                      // degree / |G|
  std::vector<std::size_t> orbit_multiset;  // indices, descending
  Subgroup core;
  Subgroup relative_core;

  bool faithful() const noexcept { return core.order == 1; }
};

FaithfulCollection make_collection(const GroupTable &g, const SocleData &sd,
                                   std::vector<Subgroup> members);

std::size_t degree(const FaithfulCollection &c);
Rational delta_of(const GroupTable &g, const FaithfulCollection &c);
std::vector<std::size_t> orbit_multiset(const FaithfulCollection &c);

struct GreedyStep {
  Subgroup chosen;
  Subgroup remaining;  // T after intersecting with the chosen core
  Rational delta{0};   // running sum of 1/|H|
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
};

enum class TieBreak { Lex, All };

struct GreedyOptions {
  TieBreak tie_break = TieBreak::Lex;
  bool force = false;  // run on groups that are not socle friendly
};

struct GreedyResult {
  FaithfulCollection collection;
  GreedyTrace trace;
  bool advisory = false;  // forced run on a non-socle-friendly group: an upper bound only
  std::vector<FaithfulCollection> perfect;  // filled for TieBreak::All
};

std::vector<Subgroup> codimension_one_subgroups(const Analysis &a);
std::vector<std::size_t> codimension_one_ids(const Analysis &a);

/// Throws NotCodimOne if a member lies outside the codimension-one set.
bool is_independent(const Analysis &a, const std::vector<Subgroup> &hs);

/// Returns (H*N1, H*N2) for the first pair of minimal normals (N1, N2), in
/// lattice order, that raise dim RC(H) by two.
std::pair<Subgroup, Subgroup> replace_codim_ge2(const Analysis &a, const Subgroup &h);

/// Repeatedly picks a largest subgroup not containing T, starting from
/// T = socle. Ties go to the lexicographically smallest membership set.
GreedyResult greedy_minimal_collection(const Analysis &a, GreedyOptions options = {});

struct EnumerateOptions {
  std::size_t branch_cap = 4096;       // choices allowed at a single step
  std::size_t collection_cap = 10000;  // distinct collections returned
};

/// All collections reachable by some sequence of greedy choices, one per
/// unordered set of member conjugacy classes.
std::vector<FaithfulCollection> enumerate_perfect_collections(const Analysis &a,
                                                              EnumerateOptions options = {});

/// Whether some ordering of the members is a valid greedy choice sequence.
bool is_greedy_reachable(const Analysis &a, const std::vector<Subgroup> &members);

struct SmallDimBound {
  unsigned k = 0;
  Rational bound{0};  // k / 2^(k-1)
  bool holds = false;
  FaithfulCollection witness;  // {prod_{j != i} S_j}
  bool witness_faithful = false;
  bool witness_within_bound = false;
};

SmallDimBound small_dim_bound_check(const Analysis &a, const Rational &delta_g);

struct CyclicSandwich {
  Subgroup p_subgroup;
  std::size_t prime = 0;
  bool lower_holds = false;   // 1/l <= delta
  bool upper_holds = false;   // delta <= 1/l + 1/|P|
  bool dim_at_most_one = false;
  bool rc_inside_socle_of_p = false;
};

struct EllSandwichReport {
  std::size_t ell = 0;
  Rational delta{0};
  std::vector<CyclicSandwich> checks;
  bool all_hold() const;
};

/// `ell` is the smallest member order over all minimal faithful collections.
EllSandwichReport ell_sandwich_check(const Analysis &a, const Rational &delta_g, std::size_t ell);

/// Cyclic subgroups of prime-power order not inside a larger cyclic
/// subgroup of the same prime.
std::vector<std::size_t> maximal_cyclic_prime_power_ids(const Analysis &a);

}  // namespace minperm
