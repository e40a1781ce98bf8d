#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minperm/lattice.hpp"

namespace minperm {

/// Minimal normal subgroups, the socle, and the lattice of normal subgroups
/// inside the socle ("tee") with its dimension function.
struct SocleData {
  std::vector<Subgroup> minimal_normals;
  Subgroup socle;
  std::vector<Subgroup> tee;
  std::vector<unsigned> tee_dims;  // parallel to tee
  unsigned dim_g = 0;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> tee_lookup;

  std::optional<std::size_t> tee_id(const ElementSet &t) const;
  /// Dimension of a member of tee; throws if t is not in tee.
  unsigned dim(const ElementSet &t) const;
};

std::vector<Subgroup> minimal_normal_subgroups(const GroupTable &g, const SubgroupLattice &lattice);

/// Throws DimensionInconsistency if two decomposition orders disagree.
SocleData compute_socle_data(const GroupTable &g, const SubgroupLattice &lattice);

/// Number of minimal normal factors met when decomposing t, taking minimal
/// normals in the given order.
unsigned decomposition_length(const GroupTable &g, const SocleData &sd, const ElementSet &t,
                              std::span<const std::size_t> order);

/// Join of the minimal normal subgroups contained in h.
Subgroup relative_core(const GroupTable &g, const SocleData &sd, const Subgroup &h);

/// Relative core of a collection: intersection of the members' relative cores.
Subgroup collection_relative_core(const GroupTable &g, const SocleData &sd,
                                  std::span<const Subgroup> hs);

unsigned dim_of_subgroup(const GroupTable &g, const SocleData &sd, const Subgroup &h);
unsigned codim(const GroupTable &g, const SocleData &sd, const Subgroup &h);

/// Relative-core tee index of every lattice subgroup.
std::vector<std::size_t> relative_core_ids(const GroupTable &g, const SubgroupLattice &lattice,
                                           const SocleData &sd);

struct SocleFriendliness {
  bool friendly = true;
  /// First failing (H, T) pair in lattice order, when not friendly.
  std::optional<std::pair<Subgroup, Subgroup>> witness;
};

/// Checks RC(H*T) = RC(H)*T over all subgroups H. It is enough to test T
/// ranging over minimal normal subgroups: every T in tee is a product of
/// them, and the identity for H*N1 and N2 chains into one for H*(N1 N2).
SocleFriendliness is_socle_friendly(const GroupTable &g, const SubgroupLattice &lattice,
                                    const SocleData &sd);

/// F_p-rank of the p-torsion of the center; 0 when p does not divide |G|.
unsigned central_p_rank(const GroupTable &g, std::size_t p);

unsigned central_involution_count(const GroupTable &g);

}  // namespace minperm

namespace minperm {

/// Everything the minimal-degree machinery reads about one group, computed
/// once: lattice, socle data, relative cores and socle-friendliness.
struct Analysis {
  GroupTable group;
  SubgroupLattice lattice;
  SocleData socle;
  std::vector<std::size_t> rc_ids;  // tee index of RC(H) per lattice subgroup
  SocleFriendliness friendliness;

  std::size_t order() const noexcept { return group.order(); }
  const Subgroup &rc_of(std::size_t lattice_id) const noexcept { return socle.tee[rc_ids[lattice_id]]; }
  unsigned codim_of(std::size_t lattice_id) const noexcept {
    return socle.dim_g - socle.tee_dims[rc_ids[lattice_id]];
  }
};

Analysis analyze(GroupTable g, const Caps &caps = {});

}  // namespace minperm
