#include "minperm/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace minperm {

namespace {

using nlohmann::json;

json collection_json(const CollectionSummary &c) {
  return {{"degree", c.degree},
          {"delta", to_string(c.delta)},
          {"delta_decimal", to_decimal(c.delta)},
          {"orbits", c.orbits},
          {"members", c.members}};
}

std::string multiset_text(const std::vector<std::size_t> &m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out + "}";
}

}  // namespace

std::optional<std::size_t> Report::degree() const {
  if (oracle) return oracle->degree;
  if (greedy) return greedy->collection.degree;
  return std::nullopt;
}

std::optional<Rational> Report::delta() const {
  if (oracle) return oracle->delta;
  if (greedy) return greedy->collection.delta;
  return std::nullopt;
}

std::string report_to_json(const Report &r, int indent) {
  json j;
  j["schema"] = kReportSchema;
  json e_p = json::object();
  for (const auto &[p, e] : r.e_p) e_p[std::to_string(p)] = e;
  j["group"] = {{"label", r.label},
                {"order", r.order},
                {"nilpotent", r.nilpotent},
                {"socle_friendly", r.socle_friendly},
                {"dim", r.dim},
                {"e_p", e_p},
                {"subgroups", r.subgroups},
                {"subgroup_classes", r.subgroup_classes}};
  j["socle_witness"] = r.socle_witness ? json{{"h", r.socle_witness->first}, {"n", r.socle_witness->second}}
                                       : json(nullptr);
  const auto d = r.degree();
  const auto delta = r.delta();
  j["degree"] = d ? json(*d) : json(nullptr);
  j["delta"] = delta ? json(to_string(*delta)) : json(nullptr);
  j["delta_decimal"] = delta ? json(to_decimal(*delta)) : json(nullptr);
  if (r.greedy) {
    j["greedy"] = collection_json(r.greedy->collection);
    j["greedy"]["advisory"] = r.greedy->advisory;
  } else {
    j["greedy"] = nullptr;
  }
  if (r.oracle) {
    const auto &o = *r.oracle;
    j["oracle"] = {{"degree", o.degree},
                   {"delta", to_string(o.delta)},
                   {"delta_decimal", to_decimal(o.delta)},
                   {"orbit_multisets", o.orbit_multisets},
                   {"smallest_stabilizer_order", o.smallest_stabilizer_order},
                   {"collections_listed", o.collections_listed},
                   {"collections_complete", o.collections_complete},
                   {"first_collection", o.first_collection ? collection_json(*o.first_collection) : json(nullptr)}};
  } else {
    j["oracle"] = nullptr;
  }
  j["perfect"] = r.perfect ? json{{"count", r.perfect->count}, {"orbit_multisets", r.perfect->orbit_multisets}}
                           : json(nullptr);
  j["notes"] = r.notes;
  return j.dump(indent);
}

std::string report_to_text(const Report &r) {
  std::ostringstream out;
  out << "group            " << r.label << "\n";
  out << "order            " << r.order << "\n";
  out << "subgroups        " << r.subgroups << " (" << r.subgroup_classes << " conjugacy classes)\n";
  out << "nilpotent        " << (r.nilpotent ? "yes" : "no") << "\n";
  out << "socle friendly   " << (r.socle_friendly ? "yes" : "no") << "\n";
  if (r.socle_witness) {
    out << "  witness H      " << multiset_text({r.socle_witness->first.begin(), r.socle_witness->first.end()})
        << "\n";
    out << "  witness N      " << multiset_text({r.socle_witness->second.begin(), r.socle_witness->second.end()})
        << "\n";
  }
  out << "dim G            " << r.dim << "\n";
  out << "e_p             ";
  if (r.e_p.empty()) out << " -";
  for (const auto &[p, e] : r.e_p) out << " " << p << ":" << e;
  out << "\n";
  if (r.greedy) {
    const auto &c = r.greedy->collection;
    out << "greedy d(G)      " << c.degree << (r.greedy->advisory ? "  (upper bound only)" : "") << "\n";
    out << "greedy orbits    " << multiset_text(c.orbits) << "\n";
  }
  if (r.oracle) {
    const auto &o = *r.oracle;
    out << "oracle d(G)      " << o.degree << "\n";
    out << "orbit multisets ";
    for (const auto &m : o.orbit_multisets) out << " " << multiset_text(m);
    out << "\n";
    out << "minimal listed   " << o.collections_listed << (o.collections_complete ? "" : " (truncated)") << "\n";
    out << "smallest stab.   " << o.smallest_stabilizer_order << "\n";
  }
  if (const auto delta = r.delta())
    out << "Delta(G)         " << to_string(*delta) << " = " << to_decimal(*delta) << "\n";
  if (r.perfect) {
    out << "perfect          " << r.perfect->count;
    for (const auto &m : r.perfect->orbit_multisets) out << " " << multiset_text(m);
    out << "\n";
  }
  for (const auto &n : r.notes) out << "note: " << n << "\n";
  out << std::fixed << std::setprecision(1) << "time (ms)        analysis " << r.timing.analysis_ms << ", greedy " << r.timing.greedy_ms << ", oracle " << r.timing.oracle_ms << "\n";
  return out.str();
}

}  // namespace minperm
