#include <doctest.h>

#include <json.hpp>

#include "minperm/catalog.hpp"
#include "minperm/error.hpp"
#include "minperm/lattice.hpp"
#include "oracles.hpp"

using namespace minperm;

namespace {

std::set<std::vector<ElementId>> lattice_sets(const SubgroupLattice &l) {
  std::set<std::vector<ElementId>> out;
  for (const auto &h : l.subgroups()) out.insert(h.elements());
  return out;
}

}  // namespace

TEST_CASE("lattice matches subset enumeration on small groups") {
  for (const auto *spec : {"C1", "C2", "C6", "C2 x C2", "D3", "D4", "Q8", "D5", "C4 x C2", "C2 x C2 x C2", "C12",
                           "Q16", "C2 x C2 x C2 x C2", "D4 x C2"}) {
    const auto g = build(spec);
    const auto l = enumerate_subgroups(g);
    CHECK_MESSAGE(lattice_sets(l) == oracle_ref::all_subgroups(g), spec);
    CHECK(l[l.trivial_id()].order == 1);
    CHECK(l[l.whole_id()].order == g.order());
  }
}

TEST_CASE("known subgroup counts") {
  CHECK(enumerate_subgroups(build("C2 x C2 x C2 x C2 x C2")).size() == 374);
  CHECK(enumerate_subgroups(build("C3 x C3 x C3")).size() == 28);
  CHECK(enumerate_subgroups(build("heis:3")).size() == 19);
}

TEST_CASE("lattice ordering and classes") {
  const auto g = build("D4");
  const auto l = enumerate_subgroups(g);
  for (std::size_t i = 1; i < l.size(); ++i) {
    const auto &a = l[i - 1], &b = l[i];
    CHECK((a.order < b.order || (a.order == b.order && lex_less(a.members, b.members))));
  }
  std::size_t total = 0;
  for (const auto &cls : l.conjugacy_classes()) {
    total += cls.size();
    const auto rep = cls.front();
    for (auto i : cls) {
      CHECK(l.class_of(i) == l.class_of(rep));
      CHECK(i >= rep);
    }
  }
  CHECK(total == l.size());
  // D4: 10 subgroups in 8 classes.
  CHECK(l.size() == 10);
  CHECK(l.conjugacy_classes().size() == 8);
  for (auto i : l.normal_ids()) CHECK(oracle_ref::normal(g, l[i].elements()));
}

TEST_CASE("cores, joins and meets") {
  for (const auto *spec : {"D4", "D5", "saunders", "Q8", "C2 x D3"}) {
    const auto g = build(spec);
    const auto l = enumerate_subgroups(g);
    for (const auto &h : l.subgroups()) CHECK(core(g, h).elements() == oracle_ref::core(g, h.elements()));
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j) {
        const auto m = meet(g, l[i], l[j]);
        const auto jn = join(g, l[i], l[j]);
        CHECK(m.members == (l[i].members & l[j].members));
        CHECK(l[i].is_subgroup_of(jn));
        CHECK(l[j].is_subgroup_of(jn));
        // Inclusion-exclusion bound |HK| = |H||K|/|H n K| <= |<H,K>|.
        CHECK(l[i].order * l[j].order <= jn.order * m.order);
      }
  }
  const auto g = build("D3");
  const std::vector<Subgroup> none;
  CHECK(collection_core(g, none).order == g.order());
}

TEST_CASE("lattice cap") {
  Caps caps;
  caps.lattice = 100;
  try {
    enumerate_subgroups(build("C2 x C2 x C2 x C2 x C2"), caps);
    FAIL("cap ignored");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::LatticeCapExceeded);
    CHECK(exit_code_for(e.code()) == 2);
  }
}

TEST_CASE("lattice json") {
  const auto g = build("C2 x C2");
  const auto j = nlohmann::json::parse(lattice_to_json(g, enumerate_subgroups(g)));
  CHECK(j["schema"] == "minperm.lattice/1");
  CHECK(j["subgroups"].size() == 5);
}
