#include "minperm/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "minperm/error.hpp"

namespace minperm {

namespace {

void check_cap(std::size_t order, std::size_t cap, const std::string &what) {
  if (order > cap)
    throw Error(ErrorCode::OrderCapExceeded,
                what + " has order " + std::to_string(order) + " above cap " + std::to_string(cap));
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::size_t> &v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u ^ (x + 0x9e3779b9u + (h << 6) + (h >> 2));
    return h;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// GroupTable

GroupTable GroupTable::from_trusted_table(std::size_t order, std::vector<ElementId> table,
                                          std::string label) {
  GroupTable g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.label_ = std::move(label);
  g.derive_caches();
  return g;
}

void GroupTable::derive_caches() {
  inverse_.assign(order_, 0);
  for (ElementId a = 0; a < order_; ++a) {
    const auto r = row(a);
    const auto it = std::find(r.begin(), r.end(), identity);
    inverse_[a] = static_cast<ElementId>(it - r.begin());
  }

  element_orders_.assign(order_, 1);
  for (ElementId a = 1; a < order_; ++a) {
    unsigned k = 1;
    for (ElementId x = a; x != identity; x = mul(x, a)) ++k;
    element_orders_[a] = k;
  }

  generators_.clear();
  ElementSet span(order_);
  span.insert(identity);
  for (ElementId x = 0; x < order_; ++x) {
    if (span.contains(x)) continue;
    const ElementId extra[] = {x};
    span = extend_subgroup(*this, span, generators_, extra);
    generators_.push_back(x);
  }
}

bool GroupTable::is_abelian() const noexcept {
  for (ElementId a : generators_)
    for (ElementId b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ElementId GroupTable::power(ElementId x, std::size_t k) const noexcept {
  ElementId result = identity;
  for (std::size_t i = 0; i < k % element_orders_[x]; ++i) result = mul(result, x);
  return result;
}

bool GroupTable::satisfies_group_axioms() const {
  for (ElementId x = 0; x < order_; ++x) {
    if (mul(identity, x) != x || mul(x, identity) != x) return false;
    if (mul(x, inverse_[x]) != identity || mul(inverse_[x], x) != identity) return false;
  }
  for (ElementId a = 0; a < order_; ++a)
    for (ElementId b = 0; b < order_; ++b) {
      const ElementId ab = mul(a, b);
      for (ElementId c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Constructors

GroupTable group_from_cayley_table(const std::vector<std::vector<ElementId>> &table,
                                   std::string label, std::size_t order_cap) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty table");
  check_cap(n, order_cap, "Cayley table");

  std::vector<ElementId> flat;
  flat.reserve(n * n);
  for (const auto &r : table) {
    if (r.size() != n) throw Error(ErrorCode::NotAGroup, "table is not square");
    for (ElementId x : r) {
      if (x >= n) throw Error(ErrorCode::NotAGroup, "entry " + std::to_string(x) + " out of range");
      flat.push_back(x);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (flat[x] != x || flat[x * n] != x)
      throw Error(ErrorCode::NotAGroup, "id 0 does not act as the identity");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b)
      has_inverse = flat[a * n + b] == 0 && flat[b * n + a] == 0;
    if (!has_inverse) throw Error(ErrorCode::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = flat[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (flat[ab * n + c] != flat[a * n + flat[b * n + c]])
          throw Error(ErrorCode::NotAGroup, "associativity fails at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
    }
  return GroupTable::from_trusted_table(n, std::move(flat), std::move(label));
}

GroupTable group_from_permutations(const PermGenerators &gens, std::string label,
                                   std::size_t order_cap) {
  const std::size_t m = gens.degree;
  if (m == 0) throw Error(ErrorCode::InvalidPermutation, "degree must be positive");
  for (const auto &p : gens.generators) {
    if (p.size() != m) throw Error(ErrorCode::InvalidPermutation, "generator has wrong length");
    std::vector<bool> seen(m, false);
    for (auto x : p) {
      if (x >= m || seen[x]) throw Error(ErrorCode::InvalidPermutation, "generator is not a bijection");
      seen[x] = true;
    }
  }

  using Perm = std::vector<std::size_t>;
  std::vector<Perm> elements;
  std::unordered_map<Perm, ElementId, VectorHash> ids;
  // right_gen[x * k + j] = id of x * gen_j
  const std::size_t k = gens.generators.size();
  std::vector<ElementId> right_gen;
  std::vector<ElementId> parent;  // x = parent[x] * gen[parent_gen[x]]
  std::vector<std::size_t> parent_gen;

  Perm identity(m);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  elements.push_back(identity);
  ids.emplace(identity, 0);
  parent.push_back(0);
  parent_gen.push_back(0);

  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t j = 0; j < k; ++j) {
      Perm prod(m);
      for (std::size_t i = 0; i < m; ++i) prod[i] = gens.generators[j][elements[x][i]];
      auto [it, inserted] = ids.emplace(prod, static_cast<ElementId>(elements.size()));
      if (inserted) {
        check_cap(elements.size() + 1, order_cap, "permutation closure");
        elements.push_back(std::move(prod));
        parent.push_back(static_cast<ElementId>(x));
        parent_gen.push_back(j);
      }
      right_gen.push_back(it->second);
    }
  }

  const std::size_t n = elements.size();
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a) table[a * n] = static_cast<ElementId>(a);
  // Column b is derived from column parent[b], which is discovered earlier.
  for (std::size_t b = 1; b < n; ++b) {
    const std::size_t pb = parent[b];
    const std::size_t j = parent_gen[b];
    for (std::size_t a = 0; a < n; ++a) table[a * n + b] = right_gen[table[a * n + pb] * k + j];
  }
  return GroupTable::from_trusted_table(n, std::move(table), std::move(label));
}

GroupTable direct_product(const GroupTable &g1, const GroupTable &g2, std::size_t order_cap) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  check_cap(n1 * n2, order_cap, "direct product");
  const std::size_t n = n1 * n2;
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b)
      for (std::size_t c = 0; c < n1; ++c)
        for (std::size_t d = 0; d < n2; ++d)
          table[(a * n2 + b) * n + (c * n2 + d)] = static_cast<ElementId>(
              g1.mul(static_cast<ElementId>(a), static_cast<ElementId>(c)) * n2 +
              g2.mul(static_cast<ElementId>(b), static_cast<ElementId>(d)));
  return GroupTable::from_trusted_table(n, std::move(table), g1.label() + " x " + g2.label());
}

GroupTable semidirect_product(const GroupTable &v, const GroupTable &h, const ActionSpec &action,
                              std::size_t order_cap) {
  const std::size_t nv = v.order();
  const std::size_t nh = h.order();
  if (!v.is_abelian()) throw Error(ErrorCode::NotAbelianNormalFactor, v.label() + " is not abelian");
  check_cap(nv * nh, order_cap, "semidirect product");
  if (action.automorphisms.size() != nh)
    throw Error(ErrorCode::ActionNotHomomorphism, "action must give one map per element of H");

  for (const auto &aut : action.automorphisms) {
    if (aut.size() != nv) throw Error(ErrorCode::ActionNotAutomorphism, "map has wrong length");
    std::vector<bool> seen(nv, false);
    for (auto x : aut) {
      if (x >= nv || seen[x]) throw Error(ErrorCode::ActionNotAutomorphism, "map is not a bijection");
      seen[x] = true;
    }
    for (ElementId x = 0; x < nv; ++x)
      for (ElementId y = 0; y < nv; ++y)
        if (aut[v.mul(x, y)] != v.mul(aut[x], aut[y]))
          throw Error(ErrorCode::ActionNotAutomorphism, "map does not respect V's multiplication");
  }
  for (ElementId a = 0; a < nh; ++a)
    for (ElementId b = 0; b < nh; ++b) {
      const auto &ab = action.automorphisms[h.mul(a, b)];
      const auto &fa = action.automorphisms[a];
      const auto &fb = action.automorphisms[b];
      for (ElementId x = 0; x < nv; ++x)
        if (ab[x] != fa[fb[x]])
          throw Error(ErrorCode::ActionNotHomomorphism, "action does not respect H's multiplication");
    }

  const std::size_t n = nv * nh;
  std::vector<ElementId> table(n * n);
  for (ElementId v1 = 0; v1 < nv; ++v1)
    for (ElementId h1 = 0; h1 < nh; ++h1) {
      const auto &twist = action.automorphisms[h1];
      for (ElementId v2 = 0; v2 < nv; ++v2)
        for (ElementId h2 = 0; h2 < nh; ++h2)
          table[(v1 * nh + h1) * n + (v2 * nh + h2)] =
              static_cast<ElementId>(v.mul(v1, twist[v2]) * nh + h.mul(h1, h2));
    }
  return GroupTable::from_trusted_table(n, std::move(table), v.label() + " x| " + h.label());
}

ActionSpec action_from_generators(const GroupTable &v, const GroupTable &h,
                                  const std::map<ElementId, std::vector<ElementId>> &images) {
  const std::size_t nv = v.order();
  std::vector<std::vector<ElementId>> act(h.order());
  std::vector<ElementId> identity(nv);
  std::iota(identity.begin(), identity.end(), ElementId{0});
  act[0] = identity;
  std::vector<ElementId> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const ElementId x = queue[i];
    for (const auto &[gen, image] : images) {
      if (image.size() != nv) throw Error(ErrorCode::ActionNotAutomorphism, "map has wrong length");
      const ElementId y = h.mul(x, gen);
      if (!act[y].empty()) continue;
      act[y].resize(nv);
      for (ElementId e = 0; e < nv; ++e) act[y][e] = act[x][image[e]];
      queue.push_back(y);
    }
  }
  if (queue.size() != h.order())
    throw Error(ErrorCode::ActionNotHomomorphism, "given elements do not generate H");
  return ActionSpec{std::move(act)};
}

// ---------------------------------------------------------------------------
// Subgroups

bool is_normal_set(const GroupTable &g, const ElementSet &members) {
  bool normal = true;
  for (ElementId s : g.generators()) {
    members.for_each([&](ElementId x) {
      if (normal && !members.contains(g.conjugate(x, s))) normal = false;
    });
    if (!normal) return false;
  }
  return true;
}

bool is_closed_subgroup(const GroupTable &g, const ElementSet &members) {
  if (members.universe() != g.order() || !members.contains(GroupTable::identity)) return false;
  const auto elems = members.to_vector();
  for (ElementId a : elems)
    for (ElementId b : elems)
      if (!members.contains(g.mul(a, b))) return false;
  return true;
}

Subgroup make_subgroup(const GroupTable &g, ElementSet members) {
  Subgroup s;
  s.order = members.count();
  s.index = g.order() / s.order;
  s.is_normal = is_normal_set(g, members);
  s.members = std::move(members);
  return s;
}

Subgroup trivial_subgroup(const GroupTable &g) {
  ElementSet s(g.order());
  s.insert(GroupTable::identity);
  return make_subgroup(g, std::move(s));
}

Subgroup whole_group(const GroupTable &g) { return make_subgroup(g, ElementSet::full(g.order())); }

ElementSet extend_subgroup(const GroupTable &g, const ElementSet &base_members,
                           std::span<const ElementId> base_generators,
                           std::span<const ElementId> extra) {
  std::vector<ElementId> gens(base_generators.begin(), base_generators.end());
  gens.insert(gens.end(), extra.begin(), extra.end());
  const auto base = base_members.to_vector();

  // Union of right cosets of the base, closed under right multiplication by
  // every generator.
  ElementSet result = base_members;
  std::vector<ElementId> reps{GroupTable::identity};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (ElementId s : gens) {
      const ElementId y = g.mul(reps[i], s);
      if (result.contains(y)) continue;
      reps.push_back(y);
      for (ElementId b : base) result.insert(g.mul(b, y));
    }
  }
  return result;
}

ElementSet normal_product(const GroupTable &g, const ElementSet &a, const ElementSet &b) {
  if (a.is_subset_of(b)) return b;
  if (b.is_subset_of(a)) return a;
  const auto av = a.to_vector();
  const auto bv = b.to_vector();
  ElementSet out(g.order());
  for (ElementId x : av)
    for (ElementId y : bv) out.insert(g.mul(x, y));
  return out;
}

std::vector<ElementId> generating_set(const GroupTable &g, const ElementSet &members) {
  std::vector<ElementId> gens;
  ElementSet span(g.order());
  span.insert(GroupTable::identity);
  members.for_each([&](ElementId x) {
    if (span.contains(x)) return;
    const ElementId extra[] = {x};
    span = extend_subgroup(g, span, gens, extra);
    gens.push_back(x);
  });
  return gens;
}

Subgroup generate(const GroupTable &g, std::span<const ElementId> elements) {
  std::vector<ElementId> gens;
  ElementSet span(g.order());
  span.insert(GroupTable::identity);
  for (ElementId x : elements) {
    if (span.contains(x)) continue;
    const ElementId extra[] = {x};
    span = extend_subgroup(g, span, gens, extra);
    gens.push_back(x);
  }
  return make_subgroup(g, std::move(span));
}

Subgroup center(const GroupTable &g) {
  ElementSet z(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElementId s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.insert(x);
  }
  return make_subgroup(g, std::move(z));
}

bool is_nilpotent(const GroupTable &g) {
  // Upper central series: Z_{i+1}/Z_i = Z(G/Z_i).
  ElementSet current(g.order());
  current.insert(GroupTable::identity);
  std::size_t size = 1;
  while (true) {
    ElementSet next(g.order());
    for (ElementId x = 0; x < g.order(); ++x) {
      bool central_mod = true;
      for (ElementId s : g.generators()) {
        const ElementId commutator = g.mul(g.mul(g.inv(x), g.inv(s)), g.mul(x, s));
        if (!current.contains(commutator)) {
          central_mod = false;
          break;
        }
      }
      if (central_mod) next.insert(x);
    }
    const std::size_t next_size = next.count();
    if (next_size == g.order()) return true;
    if (next_size == size) return false;
    current = std::move(next);
    size = next_size;
  }
}

unsigned element_order(const GroupTable &g, ElementId x) { return g.element_order(x); }

GroupTable subgroup_as_group(const GroupTable &g, const Subgroup &h, std::string label) {
  const auto elems = h.elements();
  std::vector<ElementId> local(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<ElementId>(i);
  const std::size_t n = elems.size();
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = local[g.mul(elems[a], elems[b])];
  return GroupTable::from_trusted_table(n, std::move(table), std::move(label));
}

std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, unsigned>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace minperm
