#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minperm/caps.hpp"
#include "minperm/commands.hpp"
#include "minperm/error.hpp"

namespace {

int run(int argc, char **argv) {
  CLI::App app{"Minimal faithful permutation degrees of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::optional<std::size_t> order_cap, lattice_cap;
  std::optional<std::uint64_t> seed;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--order-cap", order_cap, "Largest group order accepted");
  app.add_option("--lattice-cap", lattice_cap, "Largest subgroup count accepted");
  app.add_option("--seed", seed, "Shuffle the oracle's class order (results must not change)");

  std::string spec;
  bool greedy = false, oracle = false, both = false;
  minperm::ComputeOptions compute;
  auto *compute_cmd = app.add_subcommand("compute", "Compute d(G) and Delta(G) for a group");
  compute_cmd->add_option("spec", spec, "Group specification, e.g. \"C2 x C2\" or heis:3")->required();
  auto *g_flag = compute_cmd->add_flag("--greedy", greedy, "Greedy construction only");
  auto *o_flag = compute_cmd->add_flag("--oracle", oracle, "Exhaustive oracle only");
  auto *b_flag = compute_cmd->add_flag("--both", both, "Greedy and oracle (default)");
  g_flag->excludes(o_flag)->excludes(b_flag);
  o_flag->excludes(b_flag);
  compute_cmd->add_flag("--all-perfect", compute.all_perfect, "Enumerate all perfect collections");
  compute_cmd->add_option("--dump-lattice", compute.dump_lattice, "Write the subgroup lattice as JSON");
  compute_cmd->add_flag("--force", compute.force, "Run greedy on groups that are not socle friendly");

  unsigned k = 0;
  std::size_t p = 0;
  auto *sum_cmd = app.add_subcommand("sum-delta", "Sum of Delta over all groups of order p^k");
  sum_cmd->add_option("k", k, "Exponent: 1, 2 or 3")->required();
  sum_cmd->add_option("p", p, "Odd prime")->required();

  std::optional<std::string> tables_dir;
  auto *p4_cmd = app.add_subcommand("conjecture-p4", "Sum of Delta over groups of order p^4 from table files");
  p4_cmd->add_option("p", p, "Odd prime")->required();
  p4_cmd->add_option("tables", tables_dir, "Directory holding the fifteen Cayley tables");

  std::size_t n = 0;
  std::vector<std::size_t> primes;
  auto *sweep_cmd = app.add_subcommand("limit-sweep", "Delta(C_n x C_p) against 1/n + Delta(C_n)/p");
  sweep_cmd->add_option("n", n, "Cyclic order n")->required();
  sweep_cmd->add_option("primes", primes, "Primes p > n")->required();

  std::string suite;
  std::optional<std::string> verify_spec;
  auto *verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("--suite", suite, "main-theorem, matroid, replacement, bounds or socle-friendly")->required();
  verify_cmd->add_option("spec", verify_spec, "Group specification; the catalog battery when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  minperm::Caps caps = minperm::caps_from_env();
  if (order_cap) caps.order = *order_cap;
  if (lattice_cap) caps.lattice = *lattice_cap;

  if (*compute_cmd) {
    compute.json = json;
    compute.seed = seed;
    compute.mode = greedy ? minperm::ComputeMode::Greedy
                 : oracle ? minperm::ComputeMode::Oracle
                          : minperm::ComputeMode::Both;
    return minperm::cmd_compute(spec, compute, caps, std::cout);
  }
  if (*sum_cmd) return minperm::cmd_sum_delta(k, p, json, caps, std::cout);
  if (*p4_cmd) return minperm::cmd_conjecture_p4(p, tables_dir, json, caps, std::cout);
  if (*sweep_cmd) return minperm::cmd_limit_sweep(n, primes, json, caps, std::cout);
  return minperm::cmd_verify(suite, verify_spec, json, caps, std::cout);
}

}  // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const minperm::Error &e) {
    std::cerr << "minperm: " << e.what() << "\n";
    return minperm::exit_code_for(e.code());
  } catch (const std::exception &e) {
    std::cerr << "minperm: " << e.what() << "\n";
    return 3;
  }
}
