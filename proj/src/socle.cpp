#include "minperm/socle.hpp"

#include <algorithm>
#include <numeric>

#include "minperm/error.hpp"

namespace minperm {

namespace {

// Join of minimal normals inside `h`, as a raw membership set.
ElementSet relative_core_set(const GroupTable &g, const SocleData &sd, const ElementSet &h) {
  ElementSet acc(g.order());
  acc.insert(GroupTable::identity);
  for (const auto &n : sd.minimal_normals)
    if (n.members.is_subset_of(h) && !n.members.is_subset_of(acc))
      acc = normal_product(g, acc, n.members);
  return acc;
}

}  // namespace

std::optional<std::size_t> SocleData::tee_id(const ElementSet &t) const {
  const auto it = tee_lookup.find(t);
  if (it == tee_lookup.end()) return std::nullopt;
  return it->second;
}

unsigned SocleData::dim(const ElementSet &t) const {
  const auto id = tee_id(t);
  if (!id) throw Error(ErrorCode::InternalInvariantViolation, "subgroup is not a normal subgroup of the socle");
  return tee_dims[*id];
}

std::vector<Subgroup> minimal_normal_subgroups(const GroupTable &, const SubgroupLattice &lattice) {
  std::vector<Subgroup> out;
  const auto normals = lattice.normal_ids();
  for (std::size_t a = 0; a < normals.size(); ++a) {
    const auto &n = lattice[normals[a]];
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (std::size_t b = 0; b < a && minimal; ++b) {
      const auto &m = lattice[normals[b]];
      if (!m.is_trivial() && m.order < n.order && m.is_subgroup_of(n)) minimal = false;
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

unsigned decomposition_length(const GroupTable &g, const SocleData &sd, const ElementSet &t,
                              std::span<const std::size_t> order) {
  ElementSet acc(g.order());
  acc.insert(GroupTable::identity);
  unsigned steps = 0;
  for (std::size_t i : order) {
    const auto &n = sd.minimal_normals[i].members;
    if (n.is_subset_of(t) && !n.is_subset_of(acc)) {
      acc = normal_product(g, acc, n);
      ++steps;
    }
  }
  if (!(acc == t))
    throw Error(ErrorCode::DimensionInconsistency, "subgroup is not a product of minimal normal subgroups");
  return steps;
}

SocleData compute_socle_data(const GroupTable &g, const SubgroupLattice &lattice) {
  SocleData sd;
  sd.minimal_normals = minimal_normal_subgroups(g, lattice);

  ElementSet soc(g.order());
  soc.insert(GroupTable::identity);
  for (const auto &n : sd.minimal_normals) soc = normal_product(g, soc, n.members);
  sd.socle = make_subgroup(g, std::move(soc));

  std::vector<std::size_t> forward(sd.minimal_normals.size());
  std::iota(forward.begin(), forward.end(), std::size_t{0});
  std::vector<std::size_t> backward(forward.rbegin(), forward.rend());

  for (std::size_t id : lattice.normal_ids()) {
    const auto &t = lattice[id];
    if (!t.is_subgroup_of(sd.socle)) continue;
    const unsigned d = decomposition_length(g, sd, t.members, forward);
    if (d != decomposition_length(g, sd, t.members, backward))
      throw Error(ErrorCode::DimensionInconsistency, "dimension depends on decomposition order");
    sd.tee_lookup.emplace(t.members, sd.tee.size());
    sd.tee.push_back(t);
    sd.tee_dims.push_back(d);
  }
  sd.dim_g = sd.dim(sd.socle.members);
  return sd;
}

Subgroup relative_core(const GroupTable &g, const SocleData &sd, const Subgroup &h) {
  return make_subgroup(g, relative_core_set(g, sd, h.members));
}

Subgroup collection_relative_core(const GroupTable &g, const SocleData &sd,
                                  std::span<const Subgroup> hs) {
  ElementSet acc = sd.socle.members;
  for (const auto &h : hs) acc &= relative_core_set(g, sd, h.members);
  return make_subgroup(g, std::move(acc));
}

unsigned dim_of_subgroup(const GroupTable &g, const SocleData &sd, const Subgroup &h) {
  return sd.dim(relative_core_set(g, sd, h.members));
}

unsigned codim(const GroupTable &g, const SocleData &sd, const Subgroup &h) {
  return sd.dim_g - dim_of_subgroup(g, sd, h);
}

std::vector<std::size_t> relative_core_ids(const GroupTable &g, const SubgroupLattice &lattice,
                                           const SocleData &sd) {
  std::vector<std::size_t> out(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto id = sd.tee_id(relative_core_set(g, sd, lattice[i].members));
    if (!id) throw Error(ErrorCode::InternalInvariantViolation, "relative core outside tee");
    out[i] = *id;
  }
  return out;
}

SocleFriendliness is_socle_friendly(const GroupTable &g, const SubgroupLattice &lattice,
                                    const SocleData &sd) {
  const auto rc = relative_core_ids(g, lattice, sd);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto &h = lattice[i];
    for (const auto &n : sd.minimal_normals) {
      if (n.is_subgroup_of(h)) continue;
      // N is not inside RC(H), so RC(H)*N is direct and RC(H)*N <= RC(H*N);
      // comparing orders decides equality.
      const std::size_t hn = lattice.id_of(normal_product(g, h.members, n.members));
      const std::size_t expected = sd.tee[rc[i]].order * n.order;
      if (sd.tee[rc[hn]].order != expected) return {false, std::make_pair(h, n)};
    }
  }
  return {true, std::nullopt};
}

unsigned central_p_rank(const GroupTable &g, std::size_t p) {
  if (p < 2 || g.order() % p != 0) return 0;
  const auto z = center(g);
  std::size_t torsion = 0;
  z.members.for_each([&](ElementId x) {
    if (p % g.element_order(x) == 0) ++torsion;
  });
  unsigned rank = 0;
  while (torsion > 1) {
    torsion /= p;
    ++rank;
  }
  return rank;
}

unsigned central_involution_count(const GroupTable &g) {
  const auto z = center(g);
  unsigned count = 0;
  z.members.for_each([&](ElementId x) {
    if (g.element_order(x) == 2) ++count;
  });
  return count;
}

}  // namespace minperm

namespace minperm {

Analysis analyze(GroupTable g, const Caps &caps) {
  Analysis a{std::move(g), {}, {}, {}, {}};
  a.lattice = enumerate_subgroups(a.group, caps);
  a.socle = compute_socle_data(a.group, a.lattice);
  a.rc_ids = relative_core_ids(a.group, a.lattice, a.socle);
  a.friendliness = is_socle_friendly(a.group, a.lattice, a.socle);
  return a;
}

}  // namespace minperm
