#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "minperm/element_set.hpp"

namespace minperm {

inline constexpr std::size_t kDefaultOrderCap = 4096;

/// A finite group as its complete multiplication table. Element 0 is the
/// identity. Immutable once built.
class GroupTable {
public:
  static constexpr ElementId identity = 0;

  std::size_t order() const noexcept { return order_; }
  ElementId mul(ElementId a, ElementId b) const noexcept { return table_[a * order_ + b]; }
  ElementId inv(ElementId a) const noexcept { return inverse_[a]; }
  unsigned element_order(ElementId x) const noexcept { return element_orders_[x]; }
  std::span<const unsigned> element_orders() const noexcept { return element_orders_; }
  std::span<const ElementId> row(ElementId a) const noexcept {
    return {table_.data() + a * order_, order_};
  }
  const std::string &label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// A small generating set, picked greedily in id order.
  std::span<const ElementId> generators() const noexcept { return generators_; }

  bool is_abelian() const noexcept;
  ElementId conjugate(ElementId x, ElementId by) const noexcept {  // by^-1 x by
    return mul(mul(inverse_[by], x), by);
  }
  ElementId power(ElementId x, std::size_t k) const noexcept;

  /// Checks identity, inverse and associativity laws on every triple.
  bool satisfies_group_axioms() const;

  /// Builds from a table already known to be a group (trusted internal path).
  static GroupTable from_trusted_table(std::size_t order, std::vector<ElementId> table,
                                       std::string label);

  friend bool operator==(const GroupTable &a, const GroupTable &b) noexcept {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

private:
  void derive_caches();

  std::size_t order_ = 0;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<unsigned> element_orders_;
  std::vector<ElementId> generators_;
  std::string label_;
};

/// Permutations of {0..degree-1}, each stored as its image array.
struct PermGenerators {
  std::size_t degree = 0;
  std::vector<std::vector<std::size_t>> generators;
};

/// Homomorphism H -> Aut(V): one permutation of V's ids per element of H.
struct ActionSpec {
  std::vector<std::vector<ElementId>> automorphisms;
};

/// Validates a full n*n table (row-major). Id 0 must be the identity.
GroupTable group_from_cayley_table(const std::vector<std::vector<ElementId>> &table,
                                   std::string label,
                                   std::size_t order_cap = kDefaultOrderCap);

/// Closure of a set of permutations. Products compose left to right:
/// (a*b)[i] = b[a[i]]. Ids are assigned in breadth-first discovery order.
GroupTable group_from_permutations(const PermGenerators &gens, std::string label,
                                   std::size_t order_cap = kDefaultOrderCap);

/// Element (a, b) gets id a*|g2| + b.
GroupTable direct_product(const GroupTable &g1, const GroupTable &g2,
                          std::size_t order_cap = kDefaultOrderCap);

/// V x| H with (v1,h1)(v2,h2) = (v1 (h1.v2), h1 h2). V must be abelian; it is
/// the normal factor. Element (v, h) gets id v*|H| + h, so a trivial action
/// reproduces direct_product(v, h) exactly.
GroupTable semidirect_product(const GroupTable &v, const GroupTable &h, const ActionSpec &action,
                              std::size_t order_cap = kDefaultOrderCap);

/// Extends an assignment of automorphisms to H's generators into a full
/// ActionSpec. Consistency is checked later by semidirect_product.
ActionSpec action_from_generators(const GroupTable &v, const GroupTable &h,
                                  const std::map<ElementId, std::vector<ElementId>> &images);

/// A subgroup as a membership set, with cached order, index and normality.
struct Subgroup {
  ElementSet members;
  std::size_t order = 0;
  std::size_t index = 0;
  bool is_normal = false;

  bool contains(ElementId x) const noexcept { return members.contains(x); }
  bool is_subgroup_of(const Subgroup &other) const noexcept {
    return members.is_subset_of(other.members);
  }
  bool is_trivial() const noexcept { return order == 1; }
  std::vector<ElementId> elements() const { return members.to_vector(); }

  friend bool operator==(const Subgroup &a, const Subgroup &b) noexcept {
    return a.members == b.members;
  }
};

/// Wraps a membership set that is already known to be a subgroup.
Subgroup make_subgroup(const GroupTable &g, ElementSet members);
bool is_normal_set(const GroupTable &g, const ElementSet &members);
bool is_closed_subgroup(const GroupTable &g, const ElementSet &members);

Subgroup trivial_subgroup(const GroupTable &g);
Subgroup whole_group(const GroupTable &g);

/// Subgroup generated by the given elements.
Subgroup generate(const GroupTable &g, std::span<const ElementId> elements);

/// Smallest subgroup containing `base` (given with its generators) and `extra`.
/// Returns the new membership set; `base_members` must be a subgroup.
ElementSet extend_subgroup(const GroupTable &g, const ElementSet &base_members,
                           std::span<const ElementId> base_generators,
                           std::span<const ElementId> extra);

/// Setwise product A*B of two subgroups, at least one of them normal.
ElementSet normal_product(const GroupTable &g, const ElementSet &a, const ElementSet &b);

/// A greedy generating set for a subgroup.
std::vector<ElementId> generating_set(const GroupTable &g, const ElementSet &members);

Subgroup center(const GroupTable &g);
bool is_nilpotent(const GroupTable &g);
unsigned element_order(const GroupTable &g, ElementId x);

/// Re-indexes a subgroup as a group in its own right; ids follow ascending
/// ambient ids.
GroupTable subgroup_as_group(const GroupTable &g, const Subgroup &h, std::string label);

/// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t n);
bool is_prime(std::size_t n);

}  // namespace minperm
