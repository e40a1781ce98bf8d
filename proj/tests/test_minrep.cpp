#include <doctest.h>

#include "minperm/catalog.hpp"
#include "minperm/error.hpp"
#include "minperm/minrep.hpp"
#include "minperm/oracle.hpp"
#include "minperm/verify.hpp"

using namespace minperm;

namespace {

std::size_t count_order(const std::vector<Subgroup> &hs, std::size_t order) {
  std::size_t n = 0;
  for (const auto &h : hs) n += h.order == order;
  return n;
}

}  // namespace

TEST_CASE("codimension-one sets") {
  const auto cp = codimension_one_subgroups(analyze(build("C5")));
  REQUIRE(cp.size() == 1);
  CHECK(cp[0].order == 1);

  const auto klein = codimension_one_subgroups(analyze(build("C2 x C2")));
  CHECK(klein.size() == 3);
  CHECK(count_order(klein, 2) == 3);

  const auto s3 = codimension_one_subgroups(analyze(build("D3")));
  CHECK(s3.size() == 4);
  CHECK(count_order(s3, 1) == 1);
  CHECK(count_order(s3, 2) == 3);
}

TEST_CASE("independence") {
  const auto a = analyze(build("C2 x C2"));
  const auto lines = codimension_one_subgroups(a);
  CHECK(is_independent(a, {}));
  CHECK(is_independent(a, {lines[0], lines[1]}));
  CHECK_FALSE(is_independent(a, {lines[0], lines[0]}));
  CHECK_FALSE(is_independent(a, {lines[0], lines[1], lines[2]}));
  try {
    is_independent(a, {trivial_subgroup(a.group)});
    FAIL("accepted a subgroup of codimension two");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotCodimOne);
  }
}

TEST_CASE("replacement examples") {
  {
    const auto a = analyze(build("C3 x C3"));
    const auto [h1, h2] = replace_codim_ge2(a, trivial_subgroup(a.group));
    CHECK(h1.order == 3);
    CHECK(h2.order == 3);
    CHECK((h1.members & h2.members).count() == 1);
  }
  {
    const auto a = analyze(build("C2 x C2"));
    const auto [h1, h2] = replace_codim_ge2(a, trivial_subgroup(a.group));
    CHECK(h1.order == 2);
    CHECK(h2.order == 2);
    CHECK(h1.members != h2.members);
    // Equality case: two central involutions.
    CHECK(Rational(1, static_cast<std::int64_t>(h1.order)) + Rational(1, static_cast<std::int64_t>(h2.order)) ==
          Rational(1));
  }
  {
    const auto a = analyze(build("C6"));
    const auto [h1, h2] = replace_codim_ge2(a, trivial_subgroup(a.group));
    CHECK(Rational(1, static_cast<std::int64_t>(h1.order)) + Rational(1, static_cast<std::int64_t>(h2.order)) <
          Rational(1));
  }
  {
    const auto a = analyze(build("C2 x C2"));
    const auto lines = codimension_one_subgroups(a);
    CHECK_THROWS_AS(replace_codim_ge2(a, lines[0]), Error);
  }
  {
    const auto a = analyze(build("saunders"));
    try {
      replace_codim_ge2(a, trivial_subgroup(a.group));
      FAIL("ran on a non-socle-friendly group");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::NotSocleFriendly);
    }
  }
}

TEST_CASE("replacement postconditions over whole lattices") {
  for (const auto *spec : {"C2 x C2 x C2", "C3 x C3 x C3", "C2 x C2 x C3", "D4 x C2", "C6 x C6", "Q8 x C2",
                           "C5 x C5"}) {
    const auto r = check_replacement(analyze(build(spec)));
    CHECK(r.checked > 0);
    CHECK_MESSAGE(r.pass(), spec);
    if (r.central_involutions < 2) CHECK(r.equality_cases == 0);
  }
}

TEST_CASE("greedy examples") {
  {
    const auto g = greedy_minimal_collection(analyze(build("C2 x C2")));
    CHECK(g.collection.degree == 4);
    CHECK(g.collection.orbit_multiset == std::vector<std::size_t>{2, 2});
    CHECK(g.collection.delta == Rational(1));
  }
  {
    const auto g = greedy_minimal_collection(analyze(build("Q8")));
    REQUIRE(g.collection.members.size() == 1);
    CHECK(g.collection.members[0].order == 1);
    CHECK(g.collection.degree == 8);
  }
  for (std::size_t p : {3, 5, 7}) {
    const auto g = greedy_minimal_collection(analyze(build("C" + std::to_string(p) + " x C" + std::to_string(p))));
    CHECK(g.collection.degree == 2 * p);
    CHECK(g.collection.delta == Rational(2, static_cast<std::int64_t>(p)));
  }
  CHECK_THROWS_AS(greedy_minimal_collection(analyze(build("saunders"))), Error);
  GreedyOptions forced;
  forced.force = true;
  const auto f = greedy_minimal_collection(analyze(build("saunders")), forced);
  CHECK(f.advisory);
  CHECK(f.collection.faithful());
}

TEST_CASE("greedy trace invariants") {
  for (const auto *spec : {"C2 x C2 x C2", "C3 x C3 x C3", "C12", "D4 x C2", "heis:3 x C3", "C9 x C3", "Q8 x C3"}) {
    const auto a = analyze(build(spec));
    const auto g = greedy_minimal_collection(a);
    CHECK(g.trace.steps.size() == a.socle.dim_g);
    unsigned dim = a.socle.dim_g;
    ElementSet t = a.socle.socle.members;
    Rational delta(0);
    for (const auto &s : g.trace.steps) {
      CHECK(s.remaining.members == (t & core(a.group, s.chosen).members));
      CHECK(a.socle.dim(s.remaining.members) + 1 == dim);
      delta += Rational(1, static_cast<std::int64_t>(s.chosen.order));
      CHECK(s.delta == delta);
      t = s.remaining.members;
      dim = a.socle.dim(t);
    }
    CHECK(t.count() == 1);
    CHECK(g.collection.faithful());
    CHECK(g.collection.delta == delta);
  }
}

TEST_CASE("perfect collections") {
  {
    const auto p = enumerate_perfect_collections(analyze(build("C2 x C2")));
    CHECK(p.size() == 3);
    for (const auto &c : p) CHECK(c.orbit_multiset == std::vector<std::size_t>{2, 2});
  }
  {
    const auto p = enumerate_perfect_collections(analyze(build("C25")));
    REQUIRE(p.size() == 1);
    CHECK(p[0].degree == 25);
  }
  {
    const auto p = enumerate_perfect_collections(analyze(build("heis:3")));
    for (const auto &c : p) CHECK(c.orbit_multiset == std::vector<std::size_t>{9});
  }
  for (const auto *spec : {"C2 x C2 x C2", "C2 x C2 x C3", "C6 x C2", "D4 x C2", "C3 x C3 x C3"}) {
    const auto a = analyze(build(spec));
    const auto p = enumerate_perfect_collections(a);
    REQUIRE(!p.empty());
    for (const auto &c : p) {
      CHECK(c.orbit_multiset == p.front().orbit_multiset);
      CHECK(c.faithful());
      CHECK(c.members.size() == a.socle.dim_g);
      CHECK(is_greedy_reachable(a, c.members));
    }
  }
  EnumerateOptions tight;
  tight.branch_cap = 2;
  try {
    enumerate_perfect_collections(analyze(build("C2 x C2 x C2")), tight);
    FAIL("branch cap ignored");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::BranchCapExceeded);
  }
}

TEST_CASE("collection arithmetic") {
  const auto a = analyze(build("C6"));
  std::vector<Subgroup> hs;
  for (const auto &h : a.lattice.subgroups())
    if (h.order == 2 || h.order == 3) hs.push_back(h);
  const auto c = make_collection(a.group, a.socle, hs);
  CHECK(degree(c) == 5);
  CHECK(delta_of(a.group, c) == Rational(5, 6));
  CHECK(orbit_multiset(c) == std::vector<std::size_t>{3, 2});
  CHECK(c.faithful());
  CHECK(c.relative_core.order == 1);
}

TEST_CASE("small dimension bound") {
  const auto klein = analyze(build("C2 x C2"));
  const auto b = small_dim_bound_check(klein, Rational(1));
  CHECK(b.bound == Rational(1));
  CHECK(b.holds);
  const auto e27 = analyze(build("C3 x C3 x C3"));
  const auto w = small_dim_bound_check(e27, Rational(1, 3));
  CHECK(w.bound == Rational(3, 4));
  CHECK(w.witness_faithful);
  CHECK(w.witness.delta == Rational(1, 3));
  for (const auto &h : w.witness.members) CHECK(h.order == 9);
}

TEST_CASE("cyclic sandwich") {
  const auto c6 = analyze(build("C6"));
  const auto r = ell_sandwich_check(c6, Rational(5, 6), 2);
  CHECK(r.all_hold());
  bool saw_c3 = false;
  for (const auto &c : r.checks)
    if (c.prime == 3) {
      saw_c3 = true;
      CHECK(c.lower_holds);
      CHECK(c.upper_holds);  // tight: 1/2 + 1/3 = 5/6
    }
  CHECK(saw_c3);
  CHECK(ell_sandwich_check(analyze(build("C9")), Rational(1), 1).all_hold());
}

TEST_CASE("matroid axioms") {
  for (const auto *spec : {"C2 x C2", "C3 x C3", "C2 x C2 x C2", "C6 x C2", "D4 x C2"}) {
    const auto m = check_matroid(analyze(build(spec)));
    CHECK_MESSAGE(m.pass(), spec);
  }
}
