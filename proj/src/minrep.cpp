#include "minperm/minrep.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "minperm/error.hpp"

namespace minperm {

namespace {

struct IdVectorHash {
  std::size_t operator()(const std::vector<std::size_t> &v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// Largest order among subgroups not containing t, and the ids attaining it.
std::vector<std::size_t> largest_avoiding(const Analysis &a, const ElementSet &t) {
  std::vector<std::size_t> best;
  std::size_t best_order = 0;
  for (std::size_t i = a.lattice.size(); i-- > 0;) {
    const auto &h = a.lattice[i];
    if (h.order < best_order) break;  // lattice is sorted by order
    if (t.is_subset_of(h.members)) continue;
    best_order = h.order;
    best.push_back(i);
  }
  std::reverse(best.begin(), best.end());
  return best;
}

std::vector<std::size_t> class_signature(const Analysis &a, const std::vector<std::size_t> &ids) {
  std::vector<std::size_t> sig;
  for (auto i : ids) sig.push_back(a.lattice.class_of(i));
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

FaithfulCollection make_collection(const GroupTable &g, const SocleData &sd,
                                   std::vector<Subgroup> members) {
  FaithfulCollection c;
  for (const auto &h : members) {
    c.degree += h.index;
    c.orbit_multiset.push_back(h.index);
  }
  std::sort(c.orbit_multiset.begin(), c.orbit_multiset.end(), std::greater<>());
  c.delta = Rational(static_cast<std::int64_t>(c.degree), static_cast<std::int64_t>(g.order()));
  c.core = collection_core(g, members);
  c.relative_core = collection_relative_core(g, sd, members);
  c.members = std::move(members);
  return c;
}

std::size_t degree(const FaithfulCollection &c) {
  std::size_t d = 0;
  for (const auto &h : c.members) d += h.index;
  return d;
}

Rational delta_of(const GroupTable &g, const FaithfulCollection &c) {
  return Rational(static_cast<std::int64_t>(degree(c)), static_cast<std::int64_t>(g.order()));
}

std::vector<std::size_t> orbit_multiset(const FaithfulCollection &c) {
  std::vector<std::size_t> m;
  for (const auto &h : c.members) m.push_back(h.index);
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

std::vector<std::size_t> codimension_one_ids(const Analysis &a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.lattice.size(); ++i)
    if (a.codim_of(i) == 1) out.push_back(i);
  return out;
}

std::vector<Subgroup> codimension_one_subgroups(const Analysis &a) {
  std::vector<Subgroup> out;
  for (auto i : codimension_one_ids(a)) out.push_back(a.lattice[i]);
  return out;
}

bool is_independent(const Analysis &a, const std::vector<Subgroup> &hs) {
  ElementSet acc = a.socle.socle.members;
  for (const auto &h : hs) {
    const auto id = a.lattice.id_of(h.members);
    if (a.codim_of(id) != 1) throw Error(ErrorCode::NotCodimOne, "member is not of codimension one");
    acc &= a.rc_of(id).members;
  }
  return a.socle.dim_g - a.socle.dim(acc) == hs.size();
}

std::pair<Subgroup, Subgroup> replace_codim_ge2(const Analysis &a, const Subgroup &h) {
  const auto &g = a.group;
  const auto id = a.lattice.id_of(h.members);
  if (a.codim_of(id) < 2) throw Error(ErrorCode::CodimTooSmall, "subgroup has codimension below 2");
  if (!a.friendliness.friendly) throw Error(ErrorCode::NotSocleFriendly, g.label() + " is not socle friendly");

  const auto &rc = a.rc_of(id).members;
  const auto &mins = a.socle.minimal_normals;
  for (std::size_t i = 0; i < mins.size(); ++i) {
    if (mins[i].members.is_subset_of(rc)) continue;
    const ElementSet rc1 = normal_product(g, rc, mins[i].members);
    for (std::size_t j = i + 1; j < mins.size(); ++j) {
      if (mins[j].members.is_subset_of(rc1)) continue;
      return {make_subgroup(g, normal_product(g, h.members, mins[i].members)),
              make_subgroup(g, normal_product(g, h.members, mins[j].members))};
    }
  }
  throw Error(ErrorCode::InternalInvariantViolation, "no independent pair of minimal normal subgroups");
}

GreedyResult greedy_minimal_collection(const Analysis &a, GreedyOptions options) {
  const auto &g = a.group;
  if (!a.friendliness.friendly && !options.force)
    throw Error(ErrorCode::NotSocleFriendly, g.label() + " is not socle friendly; greedy refused");

  GreedyResult result;
  result.advisory = !a.friendliness.friendly;
  ElementSet t = a.socle.socle.members;
  unsigned dim_t = a.socle.dim_g;
  Rational delta(0);
  std::vector<Subgroup> members;

  while (t.count() > 1) {
    const std::size_t pick = largest_avoiding(a, t).front();
    const auto &h = a.lattice[pick];
    if (!result.advisory && a.codim_of(pick) != 1)
      throw Error(ErrorCode::InternalInvariantViolation, "greedy choice is not of codimension one");

    ElementSet next = t & core(g, h).members;
    const unsigned dim_next = a.socle.dim(next);
    if (!result.advisory && dim_next + 1 != dim_t)
      throw Error(ErrorCode::InternalInvariantViolation, "dimension did not drop by exactly one");

    delta += Rational(1, static_cast<std::int64_t>(h.order));
    result.trace.steps.push_back({h, make_subgroup(g, next), delta});
    members.push_back(h);
    t = std::move(next);
    dim_t = dim_next;
  }
  result.collection = make_collection(g, a.socle, std::move(members));
  if (options.tie_break == TieBreak::All) result.perfect = enumerate_perfect_collections(a);
  return result;
}

std::vector<FaithfulCollection> enumerate_perfect_collections(const Analysis &a,
                                                              EnumerateOptions options) {
  if (!a.friendliness.friendly)
    throw Error(ErrorCode::NotSocleFriendly, a.group.label() + " is not socle friendly");

  std::vector<FaithfulCollection> out;
  std::unordered_set<std::vector<std::size_t>, IdVectorHash> visited;
  std::unordered_set<std::vector<std::size_t>, IdVectorHash> signatures;
  std::vector<std::size_t> chosen;

  // Partial collections are deduplicated as unordered sets, so each is
  // expanded once regardless of the order its members were picked in.
  std::function<void(const ElementSet &)> expand = [&](const ElementSet &t) {
    auto key = chosen;
    std::sort(key.begin(), key.end());
    if (!visited.insert(key).second) return;

    if (t.count() == 1) {
      auto sig = class_signature(a, chosen);
      if (!signatures.insert(sig).second) return;
      if (out.size() >= options.collection_cap)
        throw Error(ErrorCode::BranchCapExceeded,
                    "more than " + std::to_string(options.collection_cap) + " perfect collections");
      std::vector<Subgroup> members;
      for (auto i : chosen) members.push_back(a.lattice[i]);
      out.push_back(make_collection(a.group, a.socle, std::move(members)));
      return;
    }
    const auto choices = largest_avoiding(a, t);
    if (choices.size() > options.branch_cap)
      throw Error(ErrorCode::BranchCapExceeded,
                  std::to_string(choices.size()) + " choices at one step exceed the branch cap");
    for (auto c : choices) {
      chosen.push_back(c);
      expand(t & a.rc_of(c).members);
      chosen.pop_back();
    }
  };
  expand(a.socle.socle.members);
  return out;
}

bool is_greedy_reachable(const Analysis &a, const std::vector<Subgroup> &members) {
  std::vector<std::size_t> ids;
  for (const auto &h : members) ids.push_back(a.lattice.id_of(h.members));
  std::vector<bool> used(ids.size(), false);

  std::function<bool(const ElementSet &, std::size_t)> step = [&](const ElementSet &t,
                                                                   std::size_t depth) -> bool {
    if (depth == ids.size()) return t.count() == 1;
    if (t.count() == 1) return false;
    const auto choices = largest_avoiding(a, t);
    const std::size_t best_order = a.lattice[choices.front()].order;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (used[k]) continue;
      const auto &h = a.lattice[ids[k]];
      if (h.order != best_order || t.is_subset_of(h.members)) continue;
      used[k] = true;
      const bool ok = step(t & a.rc_of(ids[k]).members, depth + 1);
      used[k] = false;
      if (ok) return true;
    }
    return false;
  };
  return step(a.socle.socle.members, 0);
}

SmallDimBound small_dim_bound_check(const Analysis &a, const Rational &delta_g) {
  const auto &g = a.group;
  SmallDimBound out;
  out.k = a.socle.dim_g;
  out.bound = out.k == 0 ? Rational(0)
                         : Rational(static_cast<std::int64_t>(out.k),
                                    std::int64_t{1} << (out.k - 1));
  out.holds = delta_g <= out.bound;

  // Decompose the socle as a direct product of minimal normals.
  std::vector<const Subgroup *> factors;
  ElementSet acc(g.order());
  acc.insert(GroupTable::identity);
  for (const auto &n : a.socle.minimal_normals) {
    if (n.members.is_subset_of(acc)) continue;
    acc = normal_product(g, acc, n.members);
    factors.push_back(&n);
  }
  std::vector<Subgroup> witness;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    ElementSet prod(g.order());
    prod.insert(GroupTable::identity);
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (j != i) prod = normal_product(g, prod, factors[j]->members);
    witness.push_back(make_subgroup(g, std::move(prod)));
  }
  out.witness = make_collection(g, a.socle, std::move(witness));
  out.witness_faithful = out.witness.faithful();
  out.witness_within_bound = out.witness.delta <= out.bound;
  return out;
}

std::vector<std::size_t> maximal_cyclic_prime_power_ids(const Analysis &a) {
  std::vector<std::size_t> prime_power;
  for (auto i : a.lattice.cyclic_ids())
    if (factorize(a.lattice[i].order).size() == 1) prime_power.push_back(i);
  std::vector<std::size_t> out;
  for (auto i : prime_power) {
    const auto p = factorize(a.lattice[i].order).front().first;
    bool maximal = true;
    for (auto j : prime_power)
      if (j != i && a.lattice[j].order > a.lattice[i].order &&
          factorize(a.lattice[j].order).front().first == p && a.lattice.includes(i, j)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

bool EllSandwichReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const CyclicSandwich &c) {
    return c.lower_holds && c.upper_holds && c.dim_at_most_one && c.rc_inside_socle_of_p;
  });
}

EllSandwichReport ell_sandwich_check(const Analysis &a, const Rational &delta_g, std::size_t ell) {
  const auto &g = a.group;
  EllSandwichReport out;
  out.ell = ell;
  out.delta = delta_g;
  const Rational inv_ell(1, static_cast<std::int64_t>(ell));
  for (auto id : maximal_cyclic_prime_power_ids(a)) {
    const auto &p_sub = a.lattice[id];
    CyclicSandwich c;
    c.p_subgroup = p_sub;
    c.prime = factorize(p_sub.order).front().first;
    c.lower_holds = inv_ell <= delta_g;
    c.upper_holds = delta_g <= inv_ell + Rational(1, static_cast<std::int64_t>(p_sub.order));
    c.dim_at_most_one = a.socle.tee_dims[a.rc_ids[id]] <= 1;
    // soc(P) for cyclic P is its unique subgroup of order p.
    ElementSet soc_p(g.order());
    soc_p.insert(GroupTable::identity);
    p_sub.members.for_each([&](ElementId x) {
      if (g.element_order(x) == c.prime) soc_p.insert(x);
    });
    c.rc_inside_socle_of_p = a.rc_of(id).members.is_subset_of(soc_p);
    out.checks.push_back(std::move(c));
  }
  return out;
}

}  // namespace minperm
