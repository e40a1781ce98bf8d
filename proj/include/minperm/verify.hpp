#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "minperm/caps.hpp"
#include "minperm/oracle.hpp"

namespace minperm {

struct MatroidCheck {
  std::size_t atoms = 0;            // |codimension-one set|
  std::size_t independent_sets = 0;
  std::size_t subsets_ranked = 0;
  bool heredity = true;
  bool rank_is_codim = true;
  bool exchange = true;
  bool pass() const { return heredity && rank_is_codim && exchange; }
};

/// Exhaustive over independent subsets of the codimension-one set. Rank is
/// checked on every subset when there are at most `rank_atom_limit` atoms.
MatroidCheck check_matroid(const Analysis &a, std::size_t rank_atom_limit = 16);

struct ReplacementCheck {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t equality_cases = 0;
  unsigned central_involutions = 0;
  bool pass() const { return failures == 0; }
};

/// Every subgroup of codimension at least two; requires socle friendliness.
ReplacementCheck check_replacement(const Analysis &a);

struct BoundsCheck {
  SmallDimBound small_dim;
  EllSandwichReport sandwich;
  bool pass() const {
    return small_dim.holds && small_dim.witness_faithful && small_dim.witness_within_bound &&
           sandwich.all_hold();
  }
};

BoundsCheck check_bounds(const Analysis &a, const OracleResult &r);

struct MonotonicityCheck {
  std::size_t degree_h = 0, degree_g = 0;
  Rational delta_h{0}, delta_g{0};
  bool pass() const { return degree_h <= degree_g && delta_g <= delta_h; }
};

MonotonicityCheck check_monotonicity(const Analysis &a, const OracleResult &r, std::size_t subgroup_id,
                                     const Caps &caps = {});

struct SocleFriendlyCheck {
  bool verdict = false;
  bool full_scan_done = false;
  bool full_scan_agrees = true;
  bool nilpotent = false;
  bool pass() const { return full_scan_agrees && (!nilpotent || verdict); }
};

/// Compares the minimal-normal test with a scan over every (H, T), T in tee,
/// when the pair count is at most `scan_limit`.
SocleFriendlyCheck check_socle_friendly(const Analysis &a, std::size_t scan_limit = 4'000'000);

enum class SuiteStatus { Pass, Fail, Skip };

struct SuiteOutcome {
  std::string suite;
  std::string group;
  SuiteStatus status = SuiteStatus::Skip;
  std::string detail;
};

const std::vector<std::string> &suite_names();

/// Default battery used when no group is named.
const std::vector<std::string> &catalog_battery();

SuiteOutcome run_suite(const std::string &suite, const std::string &group_spec, const Caps &caps = {});

std::string to_string(SuiteStatus s);

}  // namespace minperm
