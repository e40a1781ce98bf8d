#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minperm/element_set.hpp"
#include "minperm/rational.hpp"

namespace minperm {

inline constexpr const char *kReportSchema = "minperm.report/1";

struct CollectionSummary {
  std::size_t degree = 0;
  Rational delta{0};
  std::vector<std::size_t> orbits;                  // indices, descending
  std::vector<std::vector<ElementId>> members;      // element ids per member
};

struct GreedySection {
  CollectionSummary collection;
  bool advisory = false;  // forced run on a non-socle-friendly group
};

struct OracleSection {
  std::size_t degree = 0;
  Rational delta{0};
  std::vector<std::vector<std::size_t>> orbit_multisets;
  std::size_t smallest_stabilizer_order = 0;
  std::size_t collections_listed = 0;
  bool collections_complete = true;
  std::optional<CollectionSummary> first_collection;
};

struct PerfectSection {
  std::size_t count = 0;
  std::vector<std::vector<std::size_t>> orbit_multisets;
};

struct Timing {
  double analysis_ms = 0, greedy_ms = 0, oracle_ms = 0;
};

struct Report {
  std::string label;
  std::size_t order = 0;
  bool nilpotent = false;
  bool socle_friendly = false;
  /// Lattice ids and element lists of the failing (H, N) pair.
  std::optional<std::pair<std::vector<ElementId>, std::vector<ElementId>>> socle_witness;
  unsigned dim = 0;
  std::map<std::size_t, unsigned> e_p;
  std::size_t subgroups = 0;
  std::size_t subgroup_classes = 0;
  std::optional<GreedySection> greedy;
  std::optional<OracleSection> oracle;
  std::optional<PerfectSection> perfect;
  std::vector<std::string> notes;
  Timing timing;  // human output only; JSON stays reproducible

  /// Oracle value when present, else greedy.
  std::optional<std::size_t> degree() const;
  std::optional<Rational> delta() const;
};

/// Versioned JSON; deterministic for a given input.
std::string report_to_json(const Report &r, int indent = 2);
std::string report_to_text(const Report &r);

}  // namespace minperm
