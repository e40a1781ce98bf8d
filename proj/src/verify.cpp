#include "minperm/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "minperm/catalog.hpp"
#include "minperm/error.hpp"

namespace minperm {

namespace {

std::string shapes_text(const std::set<OrbitShape> &shapes) {
  std::ostringstream out;
  bool first_shape = true;
  for (const auto &s : shapes) {
    out << (first_shape ? "" : " ") << '{';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << '}';
    first_shape = false;
  }
  return out.str();
}

}  // namespace

MatroidCheck check_matroid(const Analysis &a, std::size_t rank_atom_limit) {
  const auto &g = a.group;
  const auto atoms = codimension_one_ids(a);
  MatroidCheck out;
  out.atoms = atoms.size();

  auto rc_meet = [&](const std::vector<std::size_t> &ids) {
    ElementSet acc = a.socle.socle.members;
    for (auto i : ids) acc &= a.rc_of(i).members;
    return acc;
  };
  auto codim_of_set = [&](const std::vector<std::size_t> &ids) {
    return a.socle.dim_g - a.socle.dim(rc_meet(ids));
  };
  auto independent = [&](const std::vector<std::size_t> &ids) {
    std::vector<Subgroup> hs;
    for (auto i : ids) hs.push_back(a.lattice[i]);
    return is_independent(a, hs);
  };
  (void)g;

  // Independent sets as sorted index lists into `atoms`.
  std::vector<std::vector<std::size_t>> indep;
  auto ids_of = [&](const std::vector<std::size_t> &positions) {
    std::vector<std::size_t> ids;
    for (auto p : positions) ids.push_back(atoms[p]);
    return ids;
  };

  if (atoms.size() <= rank_atom_limit) {
    const std::size_t n = atoms.size();
    const std::size_t total = std::size_t{1} << n;
    std::vector<unsigned> rank(total, 0);
    std::vector<char> is_indep(total, 0);
    for (std::size_t mask = 0; mask < total; ++mask) {
      std::vector<std::size_t> positions;
      for (std::size_t k = 0; k < n; ++k)
        if (mask >> k & 1) positions.push_back(k);
      const auto ids = ids_of(positions);
      is_indep[mask] = independent(ids);
      if (is_indep[mask]) {
        rank[mask] = static_cast<unsigned>(positions.size());
        indep.push_back(positions);
      } else {
        for (std::size_t k = 0; k < n; ++k)
          if (mask >> k & 1) rank[mask] = std::max(rank[mask], rank[mask ^ (std::size_t{1} << k)]);
      }
      ++out.subsets_ranked;
      if (rank[mask] != codim_of_set(ids)) out.rank_is_codim = false;
    }
    for (std::size_t mask = 0; mask < total; ++mask) {
      if (!is_indep[mask]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if ((mask >> k & 1) && !is_indep[mask ^ (std::size_t{1} << k)]) out.heredity = false;
    }
  } else {
    std::vector<std::size_t> positions;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      indep.push_back(positions);
      for (std::size_t k = from; k < atoms.size(); ++k) {
        positions.push_back(k);
        if (independent(ids_of(positions))) grow(k + 1);
        positions.pop_back();
      }
    };
    grow(0);
    for (const auto &set : indep)
      for (std::size_t drop = 0; drop < set.size(); ++drop) {
        auto smaller = set;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        if (!independent(ids_of(smaller))) out.heredity = false;
      }
  }
  out.independent_sets = indep.size();

  for (const auto &small : indep)
    for (const auto &large : indep) {
      if (large.size() <= small.size()) continue;
      bool extended = false;
      for (auto x : large) {
        if (std::find(small.begin(), small.end(), x) != small.end()) continue;
        auto bigger = small;
        bigger.push_back(x);
        if (independent(ids_of(bigger))) {
          extended = true;
          break;
        }
      }
      if (!extended) out.exchange = false;
    }
  return out;
}

ReplacementCheck check_replacement(const Analysis &a) {
  const auto &g = a.group;
  ReplacementCheck out;
  out.central_involutions = central_involution_count(g);
  for (std::size_t i = 0; i < a.lattice.size(); ++i) {
    if (a.codim_of(i) < 2) continue;
    ++out.checked;
    const auto &h = a.lattice[i];
    const auto [h1, h2] = replace_codim_ge2(a, h);
    const auto rc1 = relative_core(g, a.socle, h1);
    const auto rc2 = relative_core(g, a.socle, h2);
    const bool meet_ok = (rc1.members & rc2.members) == relative_core(g, a.socle, h).members;
    const bool contains = h.is_subgroup_of(h1) && h.is_subgroup_of(h2);
    const Rational lhs = Rational(1, static_cast<std::int64_t>(h1.order)) +
                         Rational(1, static_cast<std::int64_t>(h2.order));
    const Rational rhs(1, static_cast<std::int64_t>(h.order));
    const bool equal = lhs == rhs;
    if (equal) ++out.equality_cases;
    const bool inequality_ok = lhs < rhs || (equal && out.central_involutions >= 2);
    if (!meet_ok || !contains || !inequality_ok) ++out.failures;
  }
  return out;
}

BoundsCheck check_bounds(const Analysis &a, const OracleResult &r) {
  return {small_dim_bound_check(a, r.delta), ell_sandwich_check(a, r.delta, r.smallest_stabilizer_order)};
}

MonotonicityCheck check_monotonicity(const Analysis &a, const OracleResult &r, std::size_t subgroup_id,
                                     const Caps &caps) {
  const auto &h = a.lattice[subgroup_id];
  const auto sub = analyze(subgroup_as_group(a.group, h, a.group.label() + "/H"), caps);
  const auto rh = brute_force_min_degree(sub, OracleOptions::from_caps(caps));
  return {rh.degree, r.degree, rh.delta, r.delta};
}

SocleFriendlyCheck check_socle_friendly(const Analysis &a, std::size_t scan_limit) {
  const auto &g = a.group;
  SocleFriendlyCheck out;
  out.verdict = a.friendliness.friendly;
  out.nilpotent = is_nilpotent(g);
  if (a.lattice.size() * a.socle.tee.size() > scan_limit) return out;
  out.full_scan_done = true;
  bool friendly = true;
  for (std::size_t i = 0; i < a.lattice.size() && friendly; ++i) {
    const auto &h = a.lattice[i];
    const auto rc_h = relative_core(g, a.socle, h);
    for (const auto &t : a.socle.tee) {
      const auto ht = make_subgroup(g, normal_product(g, h.members, t.members));
      if (relative_core(g, a.socle, ht).members != normal_product(g, rc_h.members, t.members)) {
        friendly = false;
        break;
      }
    }
  }
  out.full_scan_agrees = friendly == out.verdict;
  return out;
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"main-theorem", "matroid", "replacement", "bounds",
                                              "socle-friendly"};
  return names;
}

const std::vector<std::string> &catalog_battery() {
  static const std::vector<std::string> battery{
      "C2 x C2", "C6",        "C12",          "D3",           "D4",           "D5",
      "Q8",      "Q16",       "C4 x C2",      "C2 x C2 x C2", "C2 x C2 x C3", "C9",
      "C3 x C3", "C5 x C5",   "C9 x C3",      "C3 x C3 x C3", "heis:3",       "modp3:3",
      "saunders", "D4 x C2",  "Q8 x C3"};
  return battery;
}

std::string to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "PASS";
    case SuiteStatus::Fail: return "FAIL";
    case SuiteStatus::Skip: return "SKIP";
  }
  return "?";
}

SuiteOutcome run_suite(const std::string &suite, const std::string &group_spec, const Caps &caps) {
  SuiteOutcome out;
  out.suite = suite;
  const auto a = analyze(build(group_spec, caps), caps);
  out.group = a.group.label();
  auto verdict = [](bool ok) { return ok ? SuiteStatus::Pass : SuiteStatus::Fail; };
  std::ostringstream detail;

  if (suite == "main-theorem") {
    const auto r = brute_force_min_degree(a, OracleOptions::from_caps(caps));
    const auto m = verify_main_theorem(a, r);
    if (!m.applicable) {
      out.detail = "not nilpotent of odd order";
      return out;
    }
    out.status = verdict(m.pass());
    detail << "d=" << m.degree << " orbits expected=" << m.expected_orbits << " shapes=" << shapes_text(m.shapes);
  } else if (suite == "matroid") {
    const auto m = check_matroid(a);
    out.status = verdict(m.pass());
    detail << "atoms=" << m.atoms << " independent=" << m.independent_sets << " heredity=" << m.heredity
           << " rank=codim=" << m.rank_is_codim << " exchange=" << m.exchange;
  } else if (suite == "replacement") {
    if (!a.friendliness.friendly) {
      out.detail = "not socle friendly";
      return out;
    }
    const auto m = check_replacement(a);
    out.status = verdict(m.pass());
    detail << "checked=" << m.checked << " failures=" << m.failures << " equality=" << m.equality_cases
           << " central involutions=" << m.central_involutions;
  } else if (suite == "bounds") {
    const auto r = brute_force_min_degree(a, OracleOptions::from_caps(caps));
    const auto b = check_bounds(a, r);
    out.status = verdict(b.pass());
    detail << "delta=" << to_string(r.delta) << " <= " << to_string(b.small_dim.bound) << " (k=" << b.small_dim.k
           << "), l=" << b.sandwich.ell << ", cyclic p-subgroups=" << b.sandwich.checks.size();
  } else if (suite == "socle-friendly") {
    const auto s = check_socle_friendly(a);
    out.status = verdict(s.pass());
    detail << (s.verdict ? "friendly" : "not friendly");
    if (a.friendliness.witness)
      detail << " witness |H|=" << a.friendliness.witness->first.order
             << " |N|=" << a.friendliness.witness->second.order;
    detail << (s.full_scan_done ? " full scan agrees=" : " full scan skipped");
    if (s.full_scan_done) detail << s.full_scan_agrees;
  } else {
    throw Error(ErrorCode::ParseError, "unknown suite '" + suite + "'");
  }
  out.detail = detail.str();
  return out;
}

}  // namespace minperm
