#include "minperm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>

#include "minperm/error.hpp"

namespace minperm {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// A class of candidate members, summarized by what the search needs.
struct Move {
  std::size_t rc;     // tee id of the relative core
  std::size_t index;  // [G:H]
  std::vector<std::size_t> classes;
};

struct Transition {
  std::size_t move;
  std::size_t next;  // tee id after intersecting
};

OrbitShape with_orbit(const OrbitShape &shape, std::size_t index) {
  OrbitShape out = shape;
  out.insert(std::upper_bound(out.begin(), out.end(), index, std::greater<>()), index);
  return out;
}

std::size_t smallest_stabilizer(std::size_t order, const std::set<OrbitShape> &shapes) {
  std::size_t largest_index = 0;
  for (const auto &s : shapes)
    if (!s.empty()) largest_index = std::max(largest_index, s.front());
  return largest_index == 0 ? order : order / largest_index;
}

}  // namespace

OracleResult brute_force_min_degree(const Analysis &a, OracleOptions options) {
  const auto &g = a.group;
  const auto &lattice = a.lattice;
  const auto &classes = lattice.conjugacy_classes();
  if (classes.size() > options.class_cap)
    throw Error(ErrorCode::OracleCapExceeded, std::to_string(classes.size()) +
                                                  " conjugacy classes exceed the oracle cap of " +
                                                  std::to_string(options.class_cap));

  std::vector<std::size_t> scan(classes.size());
  std::iota(scan.begin(), scan.end(), std::size_t{0});
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(scan.begin(), scan.end(), rng);
  }

  // Members with the same relative core and index are interchangeable for
  // the search; group them.
  std::vector<Move> moves;
  {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> bucket;
    for (auto cls : scan) {
      const auto rep = lattice.representative(cls);
      const auto key = std::make_pair(a.rc_ids[rep], lattice[rep].index);
      auto [it, inserted] = bucket.emplace(key, moves.size());
      if (inserted) moves.push_back({key.first, key.second, {}});
      moves[it->second].classes.push_back(cls);
    }
    std::stable_sort(moves.begin(), moves.end(),
                     [](const Move &x, const Move &y) { return x.index < y.index; });
    for (auto &m : moves) std::sort(m.classes.begin(), m.classes.end());
  }

  OracleResult result;
  const auto &tee = a.socle.tee;
  std::vector<std::size_t> best(tee.size(), kUnreached);
  best[0] = 0;  // tee[0] is the trivial subgroup
  ElementSet scratch;

  // Tee is sorted by order and every move strictly shrinks the state, so a
  // single increasing pass sees each successor before its predecessors.
  // floor_by_order[c] is the least best[] seen at order c; it bounds the
  // cost of any successor of that order and saves most lookups.
  std::vector<std::size_t> floor_by_order(g.order() + 1, kUnreached);
  floor_by_order[1] = 0;
  auto lookup_cost = [&](std::size_t s, const Move &m, std::size_t bound) -> std::optional<std::size_t> {
    const auto &state = tee[s].members;
    const auto &rc = tee[m.rc].members;
    if (state.is_subset_of(rc)) return std::nullopt;
    scratch.assign_intersection(state, rc);
    const auto c = scratch.count();
    if (floor_by_order[c] == kUnreached || m.index + floor_by_order[c] > bound) return std::nullopt;
    const auto next = a.socle.tee_lookup.at(scratch);
    if (best[next] == kUnreached) return std::nullopt;
    return next;
  };
  for (std::size_t s = 1; s < tee.size(); ++s) {
    std::size_t b = kUnreached;
    for (const auto &m : moves) {
      if (m.index >= b) break;
      ++result.nodes_explored;
      const auto next = lookup_cost(s, m, b == kUnreached ? b : b - 1);
      if (!next) continue;
      b = std::min(b, m.index + best[*next]);
    }
    best[s] = b;
    auto &floor = floor_by_order[tee[s].order];
    floor = std::min(floor, b);
  }

  const std::size_t top = *a.socle.tee_id(a.socle.socle.members);
  if (best[top] == kUnreached)
    throw Error(ErrorCode::InternalInvariantViolation, "no faithful collection found");
  result.degree = best[top];
  result.delta = Rational(static_cast<std::int64_t>(result.degree), static_cast<std::int64_t>(g.order()));

  // Optimal transitions and the orbit shapes they produce, from the top down.
  std::unordered_map<std::size_t, std::vector<Transition>> optimal;
  // Shape sets repeat heavily across states, so they are interned.
  std::vector<std::set<OrbitShape>> shape_sets;
  std::map<std::set<OrbitShape>, std::size_t> interned;
  auto intern = [&](std::set<OrbitShape> set) {
    auto [it, inserted] = interned.emplace(std::move(set), shape_sets.size());
    if (inserted) shape_sets.push_back(it->first);
    return it->second;
  };
  std::unordered_map<std::size_t, std::size_t> shapes;
  std::function<std::size_t(std::size_t)> shapes_of = [&](std::size_t s) -> std::size_t {
    if (auto it = shapes.find(s); it != shapes.end()) return it->second;
    std::set<OrbitShape> out;
    std::vector<Transition> steps;
    if (s == 0) {
      out.insert(OrbitShape{});
    } else {
      for (std::size_t mi = 0; mi < moves.size(); ++mi) {
        const auto &m = moves[mi];
        if (m.index > best[s]) break;
        const auto next = lookup_cost(s, m, best[s]);
        if (!next || m.index + best[*next] != best[s]) continue;
        steps.push_back({mi, *next});
      }
      std::set<std::pair<std::size_t, std::size_t>> sources;  // (index, shape set)
      for (const auto &t : steps) sources.emplace(moves[t.move].index, shapes_of(t.next));
      for (const auto &[index, set_id] : sources)
        for (const auto &shape : shape_sets[set_id]) out.insert(with_orbit(shape, index));
    }
    optimal.emplace(s, std::move(steps));
    const auto id = intern(std::move(out));
    shapes.emplace(s, id);
    return id;
  };
  result.orbit_shapes = shape_sets[shapes_of(top)];
  result.smallest_stabilizer_order = smallest_stabilizer(g.order(), result.orbit_shapes);

  // Explicit collections: classes taken in increasing class id along
  // optimal transitions.
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> chosen;
  std::uint64_t listing_nodes = 0;
  bool stop = false;
  std::function<void(std::size_t, std::size_t)> list = [&](std::size_t s, std::size_t min_class) {
    if (stop) return;
    if (s == 0) {
      if (found.size() >= options.collection_cap) {
        result.collections_complete = false;
        stop = true;
        return;
      }
      found.push_back(chosen);
      return;
    }
    if (++listing_nodes > options.listing_node_budget) {
      result.collections_complete = false;
      stop = true;
      return;
    }
    for (const auto &t : optimal.at(s)) {
      const auto &cls = moves[t.move].classes;
      for (auto it = std::lower_bound(cls.begin(), cls.end(), min_class); it != cls.end(); ++it) {
        chosen.push_back(*it);
        list(t.next, *it + 1);
        chosen.pop_back();
        if (stop) return;
      }
    }
  };
  list(top, 0);
  std::sort(found.begin(), found.end());
  for (const auto &sig : found) {
    std::vector<Subgroup> members;
    for (auto cls : sig) members.push_back(lattice[lattice.representative(cls)]);
    result.minimal_collections.push_back(make_collection(g, a.socle, std::move(members)));
  }
  if (!result.collections_complete)
    result.notes.push_back("explicit list truncated at " + std::to_string(found.size()) +
                           " collections; orbit shapes remain complete");
  return result;
}

OracleResult subset_enumeration_min_degree(const GroupTable &g, const SubgroupLattice &lattice,
                                           std::uint64_t leaf_limit) {
  const auto &classes = lattice.conjugacy_classes();
  std::vector<ElementSet> cores;
  std::vector<std::size_t> indices;
  for (const auto &cls : classes) {
    ElementSet acc = lattice[cls.front()].members;
    for (auto m : cls) acc &= lattice[m].members;
    cores.push_back(std::move(acc));
    indices.push_back(lattice[cls.front()].index);
  }

  OracleResult result;
  std::size_t best = kUnreached;
  std::vector<std::vector<std::size_t>> minima;
  std::vector<std::size_t> chosen;
  const std::size_t n = g.order();

  std::function<void(std::size_t, const ElementSet &, std::size_t)> visit =
      [&](std::size_t from, const ElementSet &acc, std::size_t sum) {
        if (++result.nodes_explored > leaf_limit)
          throw Error(ErrorCode::OracleCapExceeded, "subset enumeration exceeded its limit");
        if (acc.count() == 1) {
          // Adding members to a faithful set only raises its degree.
          if (sum < best) {
            best = sum;
            minima.clear();
          }
          if (sum == best) minima.push_back(chosen);
          return;
        }
        for (std::size_t j = from; j < classes.size(); ++j) {
          if (sum + indices[j] > n) continue;  // the regular representation has degree n
          chosen.push_back(j);
          visit(j + 1, acc & cores[j], sum + indices[j]);
          chosen.pop_back();
        }
      };
  visit(0, ElementSet::full(n), 0);

  result.degree = best;
  result.delta = Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(n));
  for (const auto &sig : minima) {
    FaithfulCollection c;
    for (auto cls : sig) {
      const auto &h = lattice[classes[cls].front()];
      c.members.push_back(h);
      c.degree += h.index;
      c.orbit_multiset.push_back(h.index);
    }
    std::sort(c.orbit_multiset.begin(), c.orbit_multiset.end(), std::greater<>());
    c.delta = result.delta;
    c.core = make_subgroup(g, [&] {
      ElementSet acc = ElementSet::full(n);
      for (auto cls : sig) acc &= cores[cls];
      return acc;
    }());
    result.orbit_shapes.insert(c.orbit_multiset);
    result.minimal_collections.push_back(std::move(c));
  }
  result.smallest_stabilizer_order = smallest_stabilizer(n, result.orbit_shapes);
  return result;
}

bool is_oracle_minimal(const Analysis &a, const OracleResult &r, const FaithfulCollection &c) {
  if (!c.faithful() || c.degree != r.degree) return false;
  std::vector<std::size_t> cls;
  for (const auto &h : c.members) cls.push_back(a.lattice.class_of(a.lattice.id_of(h.members)));
  std::sort(cls.begin(), cls.end());
  return std::adjacent_find(cls.begin(), cls.end()) == cls.end();
}

MainTheoremReport verify_main_theorem(const Analysis &a, const OracleResult &r) {
  const auto &g = a.group;
  MainTheoremReport rep;
  rep.applicable = g.order() % 2 == 1 && is_nilpotent(g);
  for (const auto &[p, e] : factorize(g.order())) {
    (void)e;
    rep.e_p[p] = central_p_rank(g, p);
    rep.expected_orbits += rep.e_p[p];
  }
  rep.degree = r.degree;
  rep.shapes = r.orbit_shapes;
  rep.orbit_count_ok = std::all_of(rep.shapes.begin(), rep.shapes.end(),
                                   [&](const OrbitShape &s) { return s.size() == rep.expected_orbits; });
  rep.multiset_invariant = rep.shapes.size() == 1;
  return rep;
}

MainTheoremReport verify_main_theorem(const GroupTable &g, const Caps &caps) {
  const auto a = analyze(g, caps);
  return verify_main_theorem(a, brute_force_min_degree(a, OracleOptions::from_caps(caps)));
}

CrossCheckReport cross_check(const Analysis &a, const OracleResult &r) {
  CrossCheckReport rep;
  rep.socle_friendly = a.friendliness.friendly;
  rep.oracle_degree = r.degree;
  if (!rep.socle_friendly) {
    rep.note = "greedy refused: group is not socle friendly";
    return rep;
  }
  const auto greedy = greedy_minimal_collection(a);
  rep.greedy_degree = greedy.collection.degree;
  rep.degrees_agree = *rep.greedy_degree == r.degree;
  rep.greedy_among_minima = is_oracle_minimal(a, r, greedy.collection);
  if (rep.greedy_among_minima && r.collections_complete) {
    std::vector<std::size_t> sig;
    for (const auto &h : greedy.collection.members)
      sig.push_back(a.lattice.class_of(a.lattice.id_of(h.members)));
    std::sort(sig.begin(), sig.end());
    rep.greedy_among_minima = std::any_of(
        r.minimal_collections.begin(), r.minimal_collections.end(), [&](const FaithfulCollection &c) {
          std::vector<std::size_t> other;
          for (const auto &h : c.members) other.push_back(a.lattice.class_of(a.lattice.id_of(h.members)));
          std::sort(other.begin(), other.end());
          return other == sig;
        });
  }
  rep.perfect_reachable = true;
  for (const auto &c : r.minimal_collections) {
    if (c.members.size() != a.socle.dim_g) continue;
    ++rep.perfect_checked;
    if (!is_greedy_reachable(a, c.members)) rep.perfect_reachable = false;
  }
  if (!r.collections_complete) rep.note = "perfect reachability checked on a truncated list";
  return rep;
}

CrossCheckReport cross_check(const GroupTable &g, const Caps &caps) {
  const auto a = analyze(g, caps);
  return cross_check(a, brute_force_min_degree(a, OracleOptions::from_caps(caps)));
}

}  // namespace minperm
