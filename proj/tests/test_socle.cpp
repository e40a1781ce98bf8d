#include <doctest.h>

#include <numeric>
#include <random>

#include "minperm/catalog.hpp"
#include "minperm/socle.hpp"
#include "minperm/verify.hpp"
#include "oracles.hpp"

using namespace minperm;

TEST_CASE("minimal normal subgroups by brute force") {
  for (const auto *spec : {"C6", "C2 x C2", "D3", "D4", "Q8", "D5", "C12", "saunders", "C2 x C2 x C3", "C2 x D3"}) {
    const auto g = build(spec);
    const auto subs = oracle_ref::all_subgroups(g);
    std::set<std::vector<ElementId>> expected;
    for (const auto &n : subs) {
      if (n.size() == 1 || !oracle_ref::normal(g, n)) continue;
      bool minimal = true;
      for (const auto &m : subs)
        if (m.size() > 1 && m.size() < n.size() && oracle_ref::normal(g, m) &&
            std::includes(n.begin(), n.end(), m.begin(), m.end()))
          minimal = false;
      if (minimal) expected.insert(n);
    }
    const auto a = analyze(g);
    std::set<std::vector<ElementId>> got;
    for (const auto &n : a.socle.minimal_normals) got.insert(n.elements());
    CHECK_MESSAGE(got == expected, spec);
  }
}

TEST_CASE("socle dimensions") {
  CHECK(analyze(build("C2 x C2")).socle.dim_g == 2);
  CHECK(analyze(build("C6")).socle.dim_g == 2);
  CHECK(analyze(build("Q8")).socle.dim_g == 1);
  CHECK(analyze(build("C3 x C3 x C3")).socle.dim_g == 3);
  CHECK(analyze(build("D3")).socle.dim_g == 1);
  CHECK(analyze(build("saunders")).socle.dim_g == 2);
  const auto a = analyze(build("C9 x C3"));
  CHECK(a.socle.socle.order == 9);
}

TEST_CASE("dimension does not depend on the decomposition order") {
  std::mt19937_64 rng(7);
  for (const auto *spec : {"C2 x C2 x C2", "C3 x C3 x C3", "C2 x C2 x C3", "D4 x C2", "C5 x C5", "saunders"}) {
    const auto a = analyze(build(spec));
    std::vector<std::size_t> order(a.socle.minimal_normals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (int round = 0; round < 20; ++round) {
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t t = 0; t < a.socle.tee.size(); ++t)
        CHECK(decomposition_length(a.group, a.socle, a.socle.tee[t].members, order) == a.socle.tee_dims[t]);
    }
  }
}

TEST_CASE("relative core is core intersected with the socle") {
  for (const auto *spec : {"D4", "D5", "saunders", "Q8", "C2 x D3", "heis:3", "C12"}) {
    const auto a = analyze(build(spec));
    for (std::size_t i = 0; i < a.lattice.size(); ++i) {
      const auto expected = core(a.group, a.lattice[i]).members & a.socle.socle.members;
      CHECK(a.rc_of(i).members == expected);
      CHECK(relative_core(a.group, a.socle, a.lattice[i]).members == expected);
    }
  }
}

TEST_CASE("tee layout") {
  const auto a = analyze(build("C2 x C2"));
  CHECK(a.socle.tee.size() == 5);
  CHECK(a.socle.tee.front().order == 1);
  CHECK(a.socle.tee_dims.front() == 0);
  CHECK(a.socle.dim(a.socle.socle.members) == 2);
}

TEST_CASE("the order-18 group is not socle friendly") {
  const auto a = analyze(build("saunders"));
  REQUIRE_FALSE(a.friendliness.friendly);
  REQUIRE(a.friendliness.witness);
  const auto &[w, v1] = *a.friendliness.witness;
  CHECK(w.order == 3);
  CHECK_FALSE(w.is_normal);
  CHECK(v1.order == 3);
  CHECK(v1.is_normal);
  const auto wv = make_subgroup(a.group, normal_product(a.group, w.members, v1.members));
  CHECK(relative_core(a.group, a.socle, wv).order == 9);
  CHECK(normal_product(a.group, relative_core(a.group, a.socle, w).members, v1.members) == v1.members);
  // V1 is central.
  CHECK(v1.is_subgroup_of(center(a.group)));
}

TEST_CASE("socle friendliness agrees with a scan over the whole tee") {
  for (const auto *spec : {"C6", "D3", "D4", "D5", "Q8", "saunders", "saunders:5", "C2 x D3", "heis:3",
                           "C2 x C2 x C3", "D3 x C3", "Q8 x C3"}) {
    const auto a = analyze(build(spec));
    const auto c = check_socle_friendly(a);
    CHECK(c.full_scan_done);
    CHECK_MESSAGE(c.pass(), spec);
  }
}

TEST_CASE("central ranks") {
  CHECK(central_p_rank(build("C3 x C3 x C9"), 3) == 3);
  CHECK(central_p_rank(build("heis:3"), 3) == 1);
  CHECK(central_p_rank(build("D3"), 2) == 0);
  CHECK(central_involution_count(build("C2 x C2")) == 3);
  CHECK(central_involution_count(build("Q8")) == 1);
}
