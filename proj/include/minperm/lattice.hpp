#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "minperm/caps.hpp"
#include "minperm/group.hpp"

namespace minperm {

/// Every subgroup of a group, sorted by (order, lexicographic membership).
/// Index 0 is the trivial subgroup and the last index is the whole group.
class SubgroupLattice {
public:
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup &operator[](std::size_t i) const noexcept { return subgroups_[i]; }
  std::span<const Subgroup> subgroups() const noexcept { return subgroups_; }

  std::size_t trivial_id() const noexcept { return 0; }
  std::size_t whole_id() const noexcept { return subgroups_.size() - 1; }

  std::optional<std::size_t> find(const ElementSet &members) const;
  /// Like find(), but a missing subgroup is an internal error.
  std::size_t id_of(const ElementSet &members) const;

  /// Inclusion relation: subgroup i is contained in subgroup j.
  bool includes(std::size_t i, std::size_t j) const noexcept {
    return subgroups_[i].members.is_subset_of(subgroups_[j].members);
  }

  std::span<const ElementId> generators(std::size_t i) const noexcept { return generators_[i]; }

  /// Conjugacy classes in order of their representatives; each class lists
  /// members in lattice order, so its first entry is the representative
  /// (lexicographically smallest membership set).
  const std::vector<std::vector<std::size_t>> &conjugacy_classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t i) const noexcept { return class_of_[i]; }
  std::size_t representative(std::size_t cls) const noexcept { return classes_[cls].front(); }

  std::span<const std::size_t> normal_ids() const noexcept { return normal_ids_; }

  /// Cyclic subgroups (one generator each), in lattice order.
  std::span<const std::size_t> cyclic_ids() const noexcept { return cyclic_ids_; }

private:
  friend SubgroupLattice enumerate_subgroups(const GroupTable &g, const Caps &caps);

  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<ElementId>> generators_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> normal_ids_;
  std::vector<std::size_t> cyclic_ids_;
};

/// Full subgroup lattice: cyclic subgroups closed under joins with cyclic
/// subgroups, then sorted, with conjugacy classes and normality attached.
/// Throws LatticeCapExceeded once more than caps.lattice subgroups appear.
SubgroupLattice enumerate_subgroups(const GroupTable &g, const Caps &caps = {});

/// Distinct conjugates of h (orbit under conjugation by G's generators).
std::vector<ElementSet> conjugates(const GroupTable &g, const ElementSet &h);

/// Intersection of all conjugates of h; always normal.
Subgroup core(const GroupTable &g, const Subgroup &h);

/// Intersection of the members' cores. An empty collection gives G.
Subgroup collection_core(const GroupTable &g, std::span<const Subgroup> hs);

Subgroup join(const GroupTable &g, const Subgroup &a, const Subgroup &b);
Subgroup meet(const GroupTable &g, const Subgroup &a, const Subgroup &b);

/// JSON dump: subgroups as sorted id arrays with order/normal flags, plus
/// conjugacy class membership.
std::string lattice_to_json(const GroupTable &g, const SubgroupLattice &lattice);

}  // namespace minperm
