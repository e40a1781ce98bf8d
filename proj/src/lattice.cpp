#include "minperm/lattice.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "minperm/error.hpp"

namespace minperm {

std::optional<std::size_t> SubgroupLattice::find(const ElementSet &members) const {
  const auto it = lookup_.find(members);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::id_of(const ElementSet &members) const {
  const auto id = find(members);
  if (!id) throw Error(ErrorCode::InternalInvariantViolation, "subgroup missing from lattice");
  return *id;
}

std::vector<ElementSet> conjugates(const GroupTable &g, const ElementSet &h) {
  std::vector<ElementSet> orbit{h};
  std::unordered_map<ElementSet, bool, ElementSetHash> seen{{h, true}};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (ElementId s : g.generators()) {
      ElementSet image(g.order());
      orbit[i].for_each([&](ElementId x) { image.insert(g.conjugate(x, s)); });
      if (seen.emplace(image, true).second) orbit.push_back(std::move(image));
    }
  }
  return orbit;
}

SubgroupLattice enumerate_subgroups(const GroupTable &g, const Caps &caps) {
  if (g.order() > caps.order)
    throw Error(ErrorCode::OrderCapExceeded, "group order " + std::to_string(g.order()) + " above cap");

  const std::size_t n = g.order();
  std::vector<ElementSet> sets;
  std::vector<std::vector<ElementId>> gens;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup;

  auto add = [&](ElementSet s, std::vector<ElementId> generators) {
    auto [it, inserted] = lookup.emplace(s, sets.size());
    if (!inserted) return;
    if (sets.size() >= caps.lattice)
      throw Error(ErrorCode::LatticeCapExceeded,
                  "more than " + std::to_string(caps.lattice) + " subgroups in " + g.label() +
                      " (found " + std::to_string(sets.size()) + " before stopping)");
    sets.push_back(std::move(s));
    gens.push_back(std::move(generators));
  };

  ElementSet trivial(n);
  trivial.insert(GroupTable::identity);
  add(trivial, {});

  // Cyclic subgroups, one generator each.
  std::vector<ElementId> cyclic_generators;
  for (ElementId x = 1; x < n; ++x) {
    ElementSet c(n);
    for (ElementId y = x;; y = g.mul(y, x)) {
      c.insert(y);
      if (y == GroupTable::identity) break;
    }
    if (!lookup.contains(c)) {
      cyclic_generators.push_back(x);
      add(std::move(c), {x});
    }
  }

  // Every subgroup is a join of cyclic subgroups, so extending each found
  // subgroup by each cyclic subgroup reaches the whole lattice.
  for (std::size_t i = 1; i < sets.size(); ++i) {
    for (ElementId x : cyclic_generators) {
      if (sets[i].contains(x)) continue;
      const ElementId extra[] = {x};
      ElementSet joined = extend_subgroup(g, sets[i], gens[i], extra);
      if (lookup.contains(joined)) continue;
      auto generators = gens[i];
      generators.push_back(x);
      add(std::move(joined), std::move(generators));
    }
  }

  // Sort by (order, lexicographic membership).
  std::vector<std::size_t> perm(sets.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> orders(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) orders[i] = sets[i].count();
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (orders[a] != orders[b]) return orders[a] < orders[b];
    return lex_less(sets[a], sets[b]);
  });

  SubgroupLattice lattice;
  lattice.subgroups_.reserve(sets.size());
  lattice.generators_.reserve(sets.size());
  std::vector<bool> is_cyclic(sets.size(), false);
  for (ElementId x : cyclic_generators) {
    ElementSet c(n);
    for (ElementId y = x;; y = g.mul(y, x)) {
      c.insert(y);
      if (y == GroupTable::identity) break;
    }
    is_cyclic[lookup.at(c)] = true;
  }
  for (std::size_t pos = 0; pos < perm.size(); ++pos) {
    const std::size_t old = perm[pos];
    lattice.lookup_.emplace(sets[old], pos);
    lattice.subgroups_.push_back(make_subgroup(g, std::move(sets[old])));
    lattice.generators_.push_back(std::move(gens[old]));
    if (is_cyclic[old]) lattice.cyclic_ids_.push_back(pos);
    if (lattice.subgroups_.back().is_normal) lattice.normal_ids_.push_back(pos);
  }

  // Conjugacy classes.
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  lattice.class_of_.assign(lattice.size(), unassigned);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice.class_of_[i] != unassigned) continue;
    const std::size_t cls = lattice.classes_.size();
    std::vector<std::size_t> members;
    if (lattice.subgroups_[i].is_normal) {
      members.push_back(i);
    } else {
      for (const auto &conj : conjugates(g, lattice.subgroups_[i].members))
        members.push_back(lattice.id_of(conj));
      std::sort(members.begin(), members.end());
    }
    for (std::size_t m : members) lattice.class_of_[m] = cls;
    lattice.classes_.push_back(std::move(members));
  }
  return lattice;
}

Subgroup core(const GroupTable &g, const Subgroup &h) {
  if (h.is_normal) return h;
  ElementSet acc = h.members;
  for (const auto &c : conjugates(g, h.members)) acc &= c;
  return make_subgroup(g, std::move(acc));
}

Subgroup collection_core(const GroupTable &g, std::span<const Subgroup> hs) {
  ElementSet acc = ElementSet::full(g.order());
  for (const auto &h : hs) acc &= core(g, h).members;
  return make_subgroup(g, std::move(acc));
}

Subgroup join(const GroupTable &g, const Subgroup &a, const Subgroup &b) {
  if (a.is_normal || b.is_normal) return make_subgroup(g, normal_product(g, a.members, b.members));
  const auto gens_a = generating_set(g, a.members);
  const auto gens_b = generating_set(g, b.members);
  return make_subgroup(g, extend_subgroup(g, a.members, gens_a, gens_b));
}

Subgroup meet(const GroupTable &g, const Subgroup &a, const Subgroup &b) {
  return make_subgroup(g, a.members & b.members);
}

std::string lattice_to_json(const GroupTable &g, const SubgroupLattice &lattice) {
  nlohmann::ordered_json out;
  out["schema"] = "minperm.lattice/1";
  out["group"] = g.label();
  out["order"] = g.order();
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto &s = lattice[i];
    nlohmann::ordered_json entry;
    entry["id"] = i;
    entry["elements"] = s.elements();
    entry["order"] = s.order;
    entry["normal"] = s.is_normal;
    entry["class"] = lattice.class_of(i);
    subs.push_back(std::move(entry));
  }
  out["subgroups"] = std::move(subs);
  out["conjugacy_classes"] = lattice.conjugacy_classes();
  return out.dump(2);
}

}  // namespace minperm
