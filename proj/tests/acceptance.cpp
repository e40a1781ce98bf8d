// Acceptance battery: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Comparisons are exact; the only tolerances are the
// wall-clock budgets below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "minperm/catalog.hpp"
#include "minperm/commands.hpp"
#include "minperm/error.hpp"
#include "minperm/oracle.hpp"
#include "minperm/verify.hpp"

using namespace minperm;

namespace {

// Wall-clock budgets in seconds.
constexpr double kSumDelta2PerPrime = 5.0;
constexpr double kSumDelta3AtFive = 60.0;
constexpr double kKleinFour = 1.0;
constexpr double kGreedyOracleBattery = 600.0;
constexpr double kMainTheoremBattery = 900.0;
constexpr double kSaunders = 1.0;

// Enough classes for every abelian group of order 128.
Caps battery_caps() {
  Caps caps;
  caps.oracle_classes = 50000;
  caps.lattice = 200000;
  return caps;
}

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<std::string> greedy_oracle_battery() {
  std::vector<std::string> out;
  for (std::size_t n = 1; n <= 128; ++n)
    for (const auto &s : abelian_specs_of_order(n)) out.push_back(to_string(s));
  for (const auto *s : {"D4", "Q8"}) out.push_back(s);  // non-abelian order 8
  for (const auto *s : {"heis:3", "modp3:3"}) out.push_back(s);  // non-abelian order 27
  for (const auto *s : {"D3", "D5"}) out.push_back(s);
  return out;
}

std::vector<std::string> odd_nilpotent_battery() {
  std::vector<std::string> out;
  for (std::size_t n = 1; n <= 243; n += 2)
    for (const auto &s : abelian_specs_of_order(n)) out.push_back(to_string(s));
  for (const auto *s : {"heis:3", "modp3:3", "heis:5", "modp3:5", "heis:3 x C3", "modp3:3 x C3", "heis:3 x C5",
                        "modp3:3 x C5", "heis:3 x C7", "heis:3 x C9", "modp3:3 x C9", "heis:3 x C3 x C3",
                        "modp3:3 x C3 x C3"})
    out.push_back(s);
  return out;
}

Outcome criterion1() {
  Outcome o;
  std::ostringstream d;
  for (std::size_t p : {3, 5, 7}) {
    const auto t = Clock::now();
    const auto r = sum_delta(2, p);
    const double secs = seconds_since(t);
    const Rational expected = 1 + Rational(2, static_cast<std::int64_t>(p));
    const bool ok = r.total == expected && secs < kSumDelta2PerPrime;
    o.pass = o.pass && ok;
    d << "p=" << p << ": " << to_string(r.total) << (ok ? "" : " (expected " + to_string(expected) + ")") << "; ";
  }
  o.detail = d.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::ostringstream d;
  for (std::size_t p : {3, 5}) {
    const auto t = Clock::now();
    const auto r = sum_delta(3, p);
    const double secs = seconds_since(t);
    const auto P = static_cast<std::int64_t>(p);
    const Rational expected = 1 + Rational(3, P) + Rational(4, P * P);
    // cyclic, elementary abelian, C_{p^2} x C_p, Heisenberg, modular
    const Rational per_group[] = {1, Rational(3, P * P), Rational(1, P) + Rational(1, P * P), Rational(1, P),
                                  Rational(1, P)};
    bool ok = r.total == expected && r.groups.size() == 5;
    for (std::size_t i = 0; ok && i < 5; ++i) ok = r.groups[i].delta == per_group[i];
    if (p == 5) ok = ok && secs < kSumDelta3AtFive;
    o.pass = o.pass && ok;
    d << "p=" << p << ": " << to_string(r.total) << " in " << secs << "s; ";
  }
  o.detail = d.str();
  return o;
}

Outcome criterion3() {
  const auto t = Clock::now();
  const auto a = analyze(build("C2 x C2"));
  const auto r = brute_force_min_degree(a);
  std::size_t regular = 0, two_orbit = 0;
  for (const auto &c : r.minimal_collections) {
    regular += c.orbit_multiset == std::vector<std::size_t>{4};
    two_orbit += c.orbit_multiset == std::vector<std::size_t>{2, 2};
  }
  const double secs = seconds_since(t);
  Outcome o;
  o.pass = r.degree == 4 && regular == 1 && two_orbit == 3 && r.collections_complete && secs < kKleinFour;
  o.detail = "d=" + std::to_string(r.degree) + ", regular=" + std::to_string(regular) +
             ", {2,2} collections=" + std::to_string(two_orbit);
  return o;
}

Outcome criterion4() {
  const auto t = Clock::now();
  const auto caps = battery_caps();
  Outcome o;
  std::size_t friendly = 0, checked = 0;
  std::string failures;
  for (const auto &spec : greedy_oracle_battery()) {
    const auto a = analyze(build(spec, caps), caps);
    ++checked;
    if (!a.friendliness.friendly) continue;
    ++friendly;
    const auto r = brute_force_min_degree(a, OracleOptions::from_caps(caps));
    const auto cc = cross_check(a, r);
    if (!cc.pass()) {
      o.pass = false;
      failures += " " + spec;
    }
  }
  const double secs = seconds_since(t);
  o.pass = o.pass && secs < kGreedyOracleBattery;
  o.detail = std::to_string(friendly) + " of " + std::to_string(checked) + " groups socle friendly, all agree" +
             (failures.empty() ? "" : "; failed:" + failures) + " (" + std::to_string(static_cast<int>(secs)) + "s)";
  return o;
}

Outcome criterion5() {
  const auto t = Clock::now();
  const auto caps = battery_caps();
  Outcome o;
  std::size_t checked = 0;
  std::string failures;
  for (const auto &spec : odd_nilpotent_battery()) {
    const auto g = build(spec, caps);
    if (g.order() > 243) continue;
    const auto m = verify_main_theorem(g, caps);
    if (!m.applicable) continue;
    ++checked;
    if (!m.pass()) {
      o.pass = false;
      failures += " " + spec;
    }
  }
  const double secs = seconds_since(t);
  o.pass = o.pass && secs < kMainTheoremBattery;
  o.detail = std::to_string(checked) + " odd-order nilpotent groups" +
             (failures.empty() ? "" : "; failed:" + failures) + " (" + std::to_string(static_cast<int>(secs)) + "s)";
  return o;
}

Outcome criterion6() {
  const auto t = Clock::now();
  const auto a = analyze(build("saunders"));
  Outcome o;
  if (a.friendliness.friendly || !a.friendliness.witness) {
    o.pass = false;
    o.detail = "reported socle friendly";
    return o;
  }
  const auto &g = a.group;
  const auto &[w, v1] = *a.friendliness.witness;
  const auto v = a.socle.socle;
  const auto wv1 = make_subgroup(g, normal_product(g, w.members, v1.members));
  const auto rc_wv1 = relative_core(g, a.socle, wv1);
  const auto rc_w_times_v1 = normal_product(g, relative_core(g, a.socle, w).members, v1.members);
  const bool w_shape = w.order == 3 && !w.is_normal;
  const bool v1_shape = v1.order == 3 && v1.is_normal && v1.is_subgroup_of(center(g));
  o.pass = w_shape && v1_shape && v.order == 9 && rc_wv1.members == v.members && rc_w_times_v1 == v1.members &&
           seconds_since(t) < kSaunders;
  o.detail = "RC(W V1) has order " + std::to_string(rc_wv1.order) + ", RC(W) V1 has order " +
             std::to_string(rc_w_times_v1.count());
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::ostringstream d;
  for (const auto *spec : {"C3 x C3 x C3", "C2 x C2 x C3", "C5 x C5"}) {
    const auto m = check_matroid(analyze(build(spec)));
    o.pass = o.pass && m.pass() && m.subsets_ranked == (std::size_t{1} << m.atoms);
    d << spec << ": " << m.atoms << " atoms, " << m.independent_sets << " independent; ";
  }
  o.detail = d.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto caps = battery_caps();
  std::vector<std::string> groups = greedy_oracle_battery();
  for (const auto &s : odd_nilpotent_battery()) groups.push_back(s);
  for (const auto *s : {"saunders", "saunders:5", "Q16", "D6", "D7", "C2 x D3", "Q8 x C3", "D4 x C3"})
    groups.push_back(s);
  std::size_t bounded = 0;
  std::string failures;
  for (const auto &spec : groups) {
    const auto a = analyze(build(spec, caps), caps);
    const auto r = brute_force_min_degree(a, OracleOptions::from_caps(caps));
    ++bounded;
    if (!check_bounds(a, r).pass()) {
      o.pass = false;
      failures += " " + spec;
    }
  }
  // Twenty nested pairs: the largest proper subgroups of a few catalog groups.
  std::size_t pairs = 0;
  for (const auto *spec : {"D4", "Q8", "saunders", "heis:3", "C2 x D3", "D5", "C12", "Q16", "C3 x C3 x C3",
                           "D4 x C2"}) {
    const auto a = analyze(build(spec, caps), caps);
    const auto r = brute_force_min_degree(a, OracleOptions::from_caps(caps));
    std::size_t taken = 0;
    for (std::size_t i = a.lattice.whole_id(); i-- > 1 && taken < 2;) {
      ++taken;
      ++pairs;
      if (!check_monotonicity(a, r, i, caps).pass()) {
        o.pass = false;
        failures += std::string(" ") + spec + "/" + std::to_string(i);
      }
    }
  }
  o.pass = o.pass && pairs == 20;
  o.detail = std::to_string(bounded) + " groups bounded, " + std::to_string(pairs) + " monotone pairs" +
             (failures.empty() ? "" : "; failed:" + failures);
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t rows = 0;
  for (std::size_t n : {2, 3, 4}) {
    const auto r = limit_sweep(n, {5, 7, 11, 13});
    for (const auto &row : r.rows) {
      ++rows;
      o.pass = o.pass && row.match();
    }
  }
  o.detail = std::to_string(rows) + " exact identities";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::vector<std::string> groups;
  for (std::size_t n = 1; n <= 24; ++n)
    for (const auto &s : abelian_specs_of_order(n)) groups.push_back(to_string(s));
  for (std::size_t n = 2; n <= 12; ++n) groups.push_back("D" + std::to_string(n));
  for (const auto *s : {"Q8", "Q16", "saunders", "C2 x D3", "C3 x D3", "Q8 x C2", "D4 x C2", "C2 x C2 x D3",
                        "Q8 x C3", "D4 x C3"})
    groups.push_back(s);
  std::string failures;
  for (const auto &spec : groups) {
    const auto a = analyze(build(spec));
    const auto fast = brute_force_min_degree(a);
    const auto slow = subset_enumeration_min_degree(a.group, a.lattice);
    if (fast.degree != slow.degree || fast.orbit_shapes != slow.orbit_shapes) {
      o.pass = false;
      failures += " " + spec;
    }
  }
  o.detail = std::to_string(groups.size()) + " groups" + (failures.empty() ? "" : "; failed:" + failures);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"order p^2 sums", criterion1},          {"order p^3 sums", criterion2},
      {"Klein four minima", criterion3},       {"greedy equals oracle", criterion4},
      {"odd nilpotent orbit count", criterion5}, {"order-18 counterexample", criterion6},
      {"matroid axioms", criterion7},          {"bounds and monotonicity", criterion8},
      {"limit sweep", criterion9},             {"oracle self-consistency", criterion10}};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first
              << "): " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
