#include "minperm/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>

#include <json.hpp>

#include "minperm/catalog.hpp"
#include "minperm/cayley_io.hpp"
#include "minperm/error.hpp"
#include "minperm/oracle.hpp"
#include "minperm/verify.hpp"

namespace minperm {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Rational inv(std::size_t n) { return Rational(1, static_cast<std::int64_t>(n)); }

std::size_t ipow(std::size_t p, unsigned k) {
  std::size_t out = 1;
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

CollectionSummary summarize(const FaithfulCollection &c) {
  CollectionSummary s;
  s.degree = c.degree;
  s.delta = c.delta;
  s.orbits = c.orbit_multiset;
  for (const auto &h : c.members) s.members.push_back(h.members.to_vector());
  return s;
}

GroupDelta oracle_delta(const GroupTable &g, const Caps &caps) {
  const auto a = analyze(g, caps);
  const auto r = brute_force_min_degree(a, OracleOptions::from_caps(caps));
  return {g.label(), r.degree, r.delta, std::nullopt};
}

json group_delta_json(const GroupDelta &d) {
  json j{{"group", d.label}, {"degree", d.degree}, {"delta", to_string(d.delta)}, {"delta_decimal", to_decimal(d.delta)}};
  if (d.expected) j["expected"] = to_string(*d.expected);
  return j;
}

void print_group_delta(std::ostream &out, const GroupDelta &d) {
  out << "  " << d.label << std::string(d.label.size() < 18 ? 18 - d.label.size() : 1, ' ') << "d=" << d.degree
      << "  Delta=" << to_string(d.delta);
  if (d.expected) out << "  expected " << to_string(*d.expected) << (*d.expected == d.delta ? "" : "  MISMATCH");
  out << "\n";
}

void require_odd_prime(std::size_t p) {
  if (!is_prime(p) || p == 2)
    throw Error(ErrorCode::ParameterOutOfRange, "p must be an odd prime, got " + std::to_string(p));
}

}  // namespace

Report compute_report(const std::string &spec, const ComputeOptions &options, const Caps &caps) {
  Report rep;
  auto start = Clock::now();
  const auto a = analyze(build(spec, caps), caps);
  rep.timing.analysis_ms = ms_since(start);
  const auto &g = a.group;

  rep.label = g.label();
  rep.order = g.order();
  rep.nilpotent = is_nilpotent(g);
  rep.socle_friendly = a.friendliness.friendly;
  if (a.friendliness.witness)
    rep.socle_witness = {a.friendliness.witness->first.members.to_vector(),
                         a.friendliness.witness->second.members.to_vector()};
  rep.dim = a.socle.dim_g;
  for (const auto &[p, e] : factorize(g.order())) {
    (void)e;
    rep.e_p[p] = central_p_rank(g, p);
  }
  rep.subgroups = a.lattice.size();
  rep.subgroup_classes = a.lattice.conjugacy_classes().size();

  if (options.dump_lattice) {
    std::ofstream file(*options.dump_lattice);
    if (!file) throw Error(ErrorCode::IoError, "cannot write " + *options.dump_lattice);
    file << lattice_to_json(g, a.lattice) << "\n";
  }

  if (options.mode != ComputeMode::Oracle) {
    if (a.friendliness.friendly || options.force) {
      start = Clock::now();
      GreedyOptions go;
      go.force = options.force;
      const auto greedy = greedy_minimal_collection(a, go);
      rep.timing.greedy_ms = ms_since(start);
      rep.greedy = GreedySection{summarize(greedy.collection), greedy.advisory};
      if (greedy.advisory) rep.notes.push_back("greedy result is an upper bound on d(G); the oracle is authoritative");
    } else if (options.mode == ComputeMode::Greedy) {
      throw Error(ErrorCode::NotSocleFriendly, g.label() + " is not socle friendly; use --oracle or --force");
    } else {
      rep.notes.push_back("greedy skipped: group is not socle friendly");
    }
  }

  if (options.mode != ComputeMode::Greedy) {
    start = Clock::now();
    auto oo = OracleOptions::from_caps(caps);
    oo.shuffle_seed = options.seed;
    const auto r = brute_force_min_degree(a, oo);
    rep.timing.oracle_ms = ms_since(start);
    OracleSection o;
    o.degree = r.degree;
    o.delta = r.delta;
    o.orbit_multisets.assign(r.orbit_shapes.begin(), r.orbit_shapes.end());
    o.smallest_stabilizer_order = r.smallest_stabilizer_order;
    o.collections_listed = r.minimal_collections.size();
    o.collections_complete = r.collections_complete;
    if (!r.minimal_collections.empty()) o.first_collection = summarize(r.minimal_collections.front());
    rep.oracle = std::move(o);
    for (const auto &n : r.notes) rep.notes.push_back(n);
  }

  if (options.all_perfect) {
    if (a.friendliness.friendly) {
      EnumerateOptions eo;
      eo.branch_cap = caps.branch;
      eo.collection_cap = caps.listed_collections;
      const auto perfect = enumerate_perfect_collections(a, eo);
      PerfectSection ps;
      ps.count = perfect.size();
      std::set<std::vector<std::size_t>> shapes;
      for (const auto &c : perfect) shapes.insert(c.orbit_multiset);
      ps.orbit_multisets.assign(shapes.begin(), shapes.end());
      rep.perfect = std::move(ps);
    } else {
      rep.notes.push_back("perfect collections skipped: group is not socle friendly");
    }
  }
  return rep;
}

int cmd_compute(const std::string &spec, const ComputeOptions &options, const Caps &caps, std::ostream &out) {
  const auto rep = compute_report(spec, options, caps);
  out << (options.json ? report_to_json(rep) + "\n" : report_to_text(rep));
  if (rep.socle_friendly && rep.greedy && rep.oracle && !rep.greedy->advisory &&
      rep.greedy->collection.degree != rep.oracle->degree)
    return 3;
  return 0;
}

bool SumDeltaResult::match() const { return total == closed_form; }

SumDeltaResult sum_delta(unsigned k, std::size_t p, const Caps &caps) {
  require_odd_prime(p);
  if (k < 1 || k > 3) throw Error(ErrorCode::ParameterOutOfRange, "k must be 1, 2 or 3");
  if (ipow(p, k) > caps.order) throw Error(ErrorCode::OrderCapExceeded, "p^k exceeds the order cap");

  SumDeltaResult res;
  res.k = k;
  res.p = p;
  std::vector<std::pair<GroupTable, Rational>> groups;
  const auto ps = std::to_string(p);
  if (k == 1) {
    groups.emplace_back(build("C" + ps, caps), Rational(1));
    res.closed_form = 1;
  } else if (k == 2) {
    groups.emplace_back(build("C" + std::to_string(p * p), caps), Rational(1));
    groups.emplace_back(build("C" + ps + " x C" + ps, caps), 2 * inv(p));
    res.closed_form = 1 + 2 * inv(p);
  } else {
    const auto family = order_p3_family(p, caps.order);
    const Rational expected[] = {1, 3 * inv(p * p), inv(p) + inv(p * p), inv(p), inv(p)};
    for (std::size_t i = 0; i < family.size(); ++i) groups.emplace_back(family[i], expected[i]);
    res.closed_form = 1 + 3 * inv(p) + 4 * inv(p * p);
  }
  for (const auto &[g, expected] : groups) {
    auto d = oracle_delta(g, caps);
    d.expected = expected;
    res.total += d.delta;
    res.groups.push_back(std::move(d));
  }
  return res;
}

int cmd_sum_delta(unsigned k, std::size_t p, bool json_out, const Caps &caps, std::ostream &out) {
  const auto res = sum_delta(k, p, caps);
  bool per_group_ok = true;
  for (const auto &g : res.groups) per_group_ok = per_group_ok && g.expected == g.delta;
  const bool ok = res.match() && per_group_ok;
  if (json_out) {
    json j{{"schema", "minperm.sum-delta/1"}, {"k", k}, {"p", p}};
    j["groups"] = json::array();
    for (const auto &g : res.groups) j["groups"].push_back(group_delta_json(g));
    j["sum"] = to_string(res.total);
    j["sum_decimal"] = to_decimal(res.total);
    j["closed_form"] = to_string(res.closed_form);
    j["verdict"] = ok ? "MATCH" : "MISMATCH";
    out << j.dump(2) << "\n";
  } else {
    out << "groups of order " << p << "^" << k << "\n";
    for (const auto &g : res.groups) print_group_delta(out, g);
    static const char *forms[] = {"", "1", "1 + 2/p", "1 + 3/p + 4/p^2"};
    out << "sum Delta = " << to_string(res.total) << " = " << to_decimal(res.total) << "\n";
    out << "closed form " << forms[k] << " = " << to_string(res.closed_form) << "\n";
    out << (ok ? "MATCH" : "MISMATCH") << "\n";
  }
  return ok ? 0 : 3;
}

Rational abelian_p4_closed_form(std::size_t p) {
  return 1 + inv(p) + 3 * inv(p * p) + 7 * inv(p * p * p);
}

Rational conjectured_p4_closed_form(std::size_t p) {
  return 1 + 5 * inv(p) + 11 * inv(p * p) + 9 * inv(p * p * p);
}

ConjectureP4Result conjecture_p4(std::size_t p, const std::optional<std::string> &tables_dir, const Caps &caps) {
  require_odd_prime(p);
  const std::size_t order = ipow(p, 4);
  if (order > caps.order) throw Error(ErrorCode::OrderCapExceeded, "p^4 exceeds the order cap");
  ConjectureP4Result res;
  res.p = p;
  res.advisory = p <= 3;
  res.abelian_closed_form = abelian_p4_closed_form(p);
  res.conjectured = conjectured_p4_closed_form(p);
  for (const auto &spec : abelian_specs_of_order(order)) {
    auto d = oracle_delta(build(spec, caps), caps);
    res.abelian_sum += d.delta;
    res.abelian.push_back(std::move(d));
  }
  if (!tables_dir) return res;

  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(*tables_dir, ec)) return res;
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(*tables_dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.size() > 15)
    throw Error(ErrorCode::ParameterOutOfRange,
                std::to_string(files.size()) + " tables found; there are exactly fifteen groups of order p^4");
  for (const auto &f : files) {
    const auto g = read_cayley_table_file(f, caps.order);
    if (g.order() != order)
      throw Error(ErrorCode::ParameterOutOfRange, f.string() + " has order " + std::to_string(g.order()) +
                                                      ", expected " + std::to_string(order));
    auto d = oracle_delta(g, caps);
    res.total += d.delta;
    res.supplied.push_back(std::move(d));
  }
  res.complete = res.supplied.size() == 15;
  return res;
}

int cmd_conjecture_p4(std::size_t p, const std::optional<std::string> &tables_dir, bool json_out, const Caps &caps,
                      std::ostream &out) {
  const auto res = conjecture_p4(p, tables_dir, caps);
  if (json_out) {
    json j{{"schema", "minperm.conjecture-p4/1"}, {"p", p}, {"advisory", res.advisory}};
    j["abelian"] = json::array();
    for (const auto &g : res.abelian) j["abelian"].push_back(group_delta_json(g));
    j["abelian_sum"] = to_string(res.abelian_sum);
    j["abelian_closed_form"] = to_string(res.abelian_closed_form);
    j["tables"] = res.supplied.size();
    j["supplied"] = json::array();
    for (const auto &g : res.supplied) j["supplied"].push_back(group_delta_json(g));
    j["complete"] = res.complete;
    j["sum"] = res.complete ? json(to_string(res.total)) : json(nullptr);
    j["conjectured"] = to_string(res.conjectured);
    j["verdict"] = res.complete ? json(res.match() ? "MATCH" : "MISMATCH") : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "abelian groups of order " << p << "^4\n";
    for (const auto &g : res.abelian) print_group_delta(out, g);
    out << "abelian partial sum = " << to_string(res.abelian_sum) << "  closed form 1 + 1/p + 3/p^2 + 7/p^3 = "
        << to_string(res.abelian_closed_form) << "  " << (res.abelian_match() ? "MATCH" : "MISMATCH") << "\n";
    if (!res.supplied.empty()) {
      out << "supplied tables (" << res.supplied.size() << ")\n";
      for (const auto &g : res.supplied) print_group_delta(out, g);
    }
    if (res.complete) {
      out << "sum Delta = " << to_string(res.total) << "  conjectured 1 + 5/p + 11/p^2 + 9/p^3 = "
          << to_string(res.conjectured) << "  " << (res.match() ? "MATCH" : "MISMATCH")
          << (res.advisory ? "  (advisory: stated for p > 3)" : "") << "\n";
    }
  }
  out.flush();
  if (!res.complete)
    throw Error(ErrorCode::MissingTables, std::to_string(res.supplied.size()) +
                                              " of 15 Cayley tables supplied; only the abelian part was computed");
  if (!res.abelian_match()) return 3;
  return res.match() || res.advisory ? 0 : 3;
}

LimitSweepResult limit_sweep(std::size_t n, const std::vector<std::size_t> &primes, const Caps &caps) {
  if (n == 0) throw Error(ErrorCode::ParameterOutOfRange, "n must be positive");
  if (primes.empty()) throw Error(ErrorCode::ParameterOutOfRange, "no primes given");
  for (auto p : primes) {
    if (!is_prime(p)) throw Error(ErrorCode::ParameterOutOfRange, std::to_string(p) + " is not prime");
    if (n % p == 0) throw Error(ErrorCode::NonCoprime, std::to_string(p) + " divides " + std::to_string(n));
    if (p <= n) throw Error(ErrorCode::ParameterOutOfRange, "p must exceed n, got " + std::to_string(p));
    if (n * p > caps.order) throw Error(ErrorCode::OrderCapExceeded, "n*p exceeds the order cap");
  }
  LimitSweepResult res;
  res.n = n;
  res.delta_n = oracle_delta(cyclic_group(n, caps.order), caps).delta;
  for (auto p : primes) {
    LimitRow row;
    row.p = p;
    row.delta = oracle_delta(build("C" + std::to_string(n) + " x C" + std::to_string(p), caps), caps).delta;
    row.expected = inv(n) + res.delta_n * inv(p);
    row.gap = row.delta - inv(n);
    res.rows.push_back(row);
  }
  return res;
}

int cmd_limit_sweep(std::size_t n, const std::vector<std::size_t> &primes, bool json_out, const Caps &caps,
                    std::ostream &out) {
  const auto res = limit_sweep(n, primes, caps);
  bool ok = true;
  for (const auto &r : res.rows) ok = ok && r.match();
  if (json_out) {
    json j{{"schema", "minperm.limit-sweep/1"}, {"n", n}, {"delta_n", to_string(res.delta_n)}};
    j["rows"] = json::array();
    for (const auto &r : res.rows)
      j["rows"].push_back({{"p", r.p},
                           {"delta", to_string(r.delta)},
                           {"expected", to_string(r.expected)},
                           {"gap", to_string(r.gap)},
                           {"gap_decimal", to_decimal(r.gap)},
                           {"match", r.match()}});
    j["limit"] = to_string(inv(n));
    out << j.dump(2) << "\n";
  } else {
    out << "Delta(C" << n << ") = " << to_string(res.delta_n) << "; limit 1/" << n << " = " << to_decimal(inv(n))
        << "\n";
    out << "p      Delta(C_n x C_p)   1/n + Delta(C_n)/p   Delta - 1/n\n";
    for (const auto &r : res.rows) {
      auto pad = [](std::string s, std::size_t w) { return s.size() < w ? s + std::string(w - s.size(), ' ') : s + " "; };
      out << pad(std::to_string(r.p), 7) << pad(to_string(r.delta), 19) << pad(to_string(r.expected), 21)
          << to_decimal(r.gap) << (r.match() ? "" : "  MISMATCH") << "\n";
    }
    out << (ok ? "MATCH" : "MISMATCH") << "\n";
  }
  return ok ? 0 : 3;
}

int cmd_verify(const std::string &suite, const std::optional<std::string> &spec, bool json_out, const Caps &caps,
               std::ostream &out) {
  const auto &names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorCode::ParseError, "unknown suite '" + suite + "'");
  std::vector<std::string> groups = spec ? std::vector<std::string>{*spec} : catalog_battery();
  bool failed = false;
  json j{{"schema", "minperm.verify/1"}, {"suite", suite}, {"results", json::array()}};
  for (const auto &g : groups) {
    const auto o = run_suite(suite, g, caps);
    failed = failed || o.status == SuiteStatus::Fail;
    if (json_out)
      j["results"].push_back({{"group", o.group}, {"status", to_string(o.status)}, {"detail", o.detail}});
    else
      out << to_string(o.status) << " " << suite << " " << o.group << ": " << o.detail << "\n";
  }
  if (json_out) {
    j["pass"] = !failed;
    out << j.dump(2) << "\n";
  }
  return failed ? 3 : 0;
}

}  // namespace minperm
