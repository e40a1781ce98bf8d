#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "minperm/caps.hpp"
#include "minperm/rational.hpp"
#include "minperm/report.hpp"

namespace minperm {

enum class ComputeMode { Greedy, Oracle, Both };

struct ComputeOptions {
  ComputeMode mode = ComputeMode::Both;
  bool all_perfect = false;
  std::optional<std::string> dump_lattice;
  bool json = false;
  bool force = false;
  std::optional<std::uint64_t> seed;
};

Report compute_report(const std::string &spec, const ComputeOptions &options, const Caps &caps = {});

/// Returns the process exit code: 3 when greedy and oracle disagree on a
/// socle-friendly group.
int cmd_compute(const std::string &spec, const ComputeOptions &options, const Caps &caps, std::ostream &out);

struct GroupDelta {
  std::string label;
  std::size_t degree = 0;
  Rational delta{0};
  std::optional<Rational> expected;
};

struct SumDeltaResult {
  unsigned k = 0;
  std::size_t p = 0;
  std::vector<GroupDelta> groups;
  Rational total{0};
  Rational closed_form{0};
  bool match() const;
};

/// Sum of Delta over every group of order p^k, k in {1, 2, 3}, p an odd prime.
SumDeltaResult sum_delta(unsigned k, std::size_t p, const Caps &caps = {});
int cmd_sum_delta(unsigned k, std::size_t p, bool json, const Caps &caps, std::ostream &out);

/// 1 + 1/p + 3/p^2 + 7/p^3: the abelian groups of order p^4.
Rational abelian_p4_closed_form(std::size_t p);
/// 1 + 5/p + 11/p^2 + 9/p^3.
Rational conjectured_p4_closed_form(std::size_t p);

struct ConjectureP4Result {
  std::size_t p = 0;
  std::vector<GroupDelta> abelian;
  Rational abelian_sum{0};
  Rational abelian_closed_form{0};
  std::vector<GroupDelta> supplied;  // from table files
  bool complete = false;             // exactly fifteen tables read
  Rational total{0};
  Rational conjectured{0};
  bool advisory = false;             // p <= 3
  bool abelian_match() const { return abelian_sum == abelian_closed_form; }
  bool match() const { return complete && total == conjectured; }
};

ConjectureP4Result conjecture_p4(std::size_t p, const std::optional<std::string> &tables_dir,
                                 const Caps &caps = {});
/// Prints the abelian part before raising MissingTables when fewer than
/// fifteen tables are available.
int cmd_conjecture_p4(std::size_t p, const std::optional<std::string> &tables_dir, bool json, const Caps &caps,
                      std::ostream &out);

struct LimitRow {
  std::size_t p = 0;
  Rational delta{0};     // Delta(C_n x C_p), computed
  Rational expected{0};  // 1/n + Delta(C_n)/p
  Rational gap{0};       // delta - 1/n
  bool match() const { return delta == expected; }
};

struct LimitSweepResult {
  std::size_t n = 0;
  Rational delta_n{0};
  std::vector<LimitRow> rows;
};

LimitSweepResult limit_sweep(std::size_t n, const std::vector<std::size_t> &primes, const Caps &caps = {});
int cmd_limit_sweep(std::size_t n, const std::vector<std::size_t> &primes, bool json, const Caps &caps,
                    std::ostream &out);

/// Runs one suite on `spec`, or on the catalog battery when absent.
int cmd_verify(const std::string &suite, const std::optional<std::string> &spec, bool json, const Caps &caps,
               std::ostream &out);

}  // namespace minperm
