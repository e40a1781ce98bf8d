#include <doctest.h>

#include <sstream>

#include "minperm/catalog.hpp"
#include "minperm/cayley_io.hpp"
#include "minperm/error.hpp"
#include "minperm/rational.hpp"
#include "oracles.hpp"

using namespace minperm;

TEST_CASE("rational rendering") {
  CHECK(to_string(Rational(6, 8)) == "3/4");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_decimal(Rational(1, 3)) == "0.333333333333");
  CHECK(to_decimal(Rational(2, 3)) == "0.666666666667");
  CHECK(to_decimal(Rational(1, 1)) == "1.000000000000");
  // Ties go to even.
  CHECK(to_decimal(Rational(1, 8), 2) == "0.12");
  CHECK(to_decimal(Rational(3, 8), 2) == "0.38");
  CHECK(to_decimal(Rational(-1, 3), 3) == "-0.333");
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("element sets") {
  ElementSet a(130), b(130);
  a.insert(1);
  a.insert(129);
  b.insert(129);
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK((a & b) == b);
  CHECK((a | b).count() == 2);
  CHECK(a.to_vector() == std::vector<ElementId>{1, 129});
  CHECK(lex_less(a, b));  // {1,129} < {129}
  ElementSet s;
  s.assign_intersection(a, b);
  CHECK(s == b);
}

TEST_CASE("element orders agree with naive powering") {
  for (const auto *spec : {"C12", "D5", "Q16", "heis:3", "saunders", "C4 x C2"}) {
    const auto g = build(spec);
    for (ElementId x = 0; x < g.order(); ++x) CHECK(g.element_order(x) == oracle_ref::naive_order(g, x));
  }
}

TEST_CASE("catalog groups satisfy the group axioms") {
  for (const auto *spec : {"C1", "C7", "D3", "D4", "Q8", "Q16", "heis:3", "modp3:3", "saunders", "ab:4,2",
                           "C2 x D3"}) {
    const auto g = build(spec);
    CHECK_MESSAGE(g.satisfies_group_axioms(), spec);
  }
  CHECK(build("heis:3").order() == 27);
  CHECK(build("saunders").order() == 18);
  CHECK(build("D5").order() == 10);
  CHECK_FALSE(build("Q8").is_abelian());
  CHECK(build("ab:3,3").is_abelian());
}

TEST_CASE("permutation closure") {
  // S3 from a transposition and a 3-cycle.
  PermGenerators gens{3, {{1, 0, 2}, {1, 2, 0}}};
  const auto s3 = group_from_permutations(gens, "S3");
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK_THROWS_AS(group_from_permutations({3, {{0, 0, 1}}}, "bad"), Error);
}

TEST_CASE("cayley table validation") {
  CHECK_THROWS_AS(group_from_cayley_table({{0, 1}, {1, 1}}, "bad"), Error);
  CHECK_THROWS_AS(group_from_cayley_table({{1, 0}, {0, 1}}, "bad"), Error);  // 0 is not the identity
  const auto c2 = group_from_cayley_table({{0, 1}, {1, 0}}, "C2");
  CHECK(c2.order() == 2);
  try {
    group_from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}, "bad");
    FAIL("accepted a non-group");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotAGroup);
  }
}

TEST_CASE("cayley text round trip") {
  const auto g = build("D4");
  std::stringstream s;
  write_cayley_table(s, g);
  const auto back = read_cayley_table(s, "D4");
  CHECK(back == g);
  std::istringstream trailing("2\n0 1\n1 0\n7\n");
  CHECK_THROWS_AS(read_cayley_table(trailing, "x"), Error);
  std::istringstream big("5000\n");
  try {
    read_cayley_table(big, "x");
    FAIL("cap ignored");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::OrderCapExceeded);
  }
}

TEST_CASE("semidirect products") {
  const auto c3 = cyclic_group(3), c2 = cyclic_group(2);
  const auto trivial = action_from_generators(c3, c2, {{1, {0, 1, 2}}});
  CHECK(semidirect_product(c3, c2, trivial) == direct_product(c3, c2));
  // A non-automorphism of C3.
  const auto bad = action_from_generators(c3, c2, {{1, {0, 1, 1}}});
  CHECK_THROWS_AS(semidirect_product(c3, c2, bad), Error);
  // Non-abelian normal factor.
  const auto s3 = build("D3");
  const auto act = action_from_generators(s3, c2, {{1, {0, 1, 2, 3, 4, 5}}});
  try {
    semidirect_product(s3, c2, act);
    FAIL("accepted a non-abelian normal factor");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotAbelianNormalFactor);
  }
}

TEST_CASE("nilpotency agrees with the Sylow criterion") {
  for (const auto *spec : {"C6", "D3", "D4", "D5", "Q8", "C2 x C2 x C3", "ab:4,3", "C2 x D3", "Q16", "C15"}) {
    const auto g = build(spec);
    const auto subs = oracle_ref::all_subgroups(g);
    CHECK_MESSAGE(is_nilpotent(g) == oracle_ref::nilpotent_by_sylow(g, subs), spec);
  }
}

TEST_CASE("subgroup helpers") {
  const auto g = build("D4");
  const ElementId r = 2;  // (1, 0): a rotation
  const auto h = generate(g, std::vector<ElementId>{r});
  CHECK(h.order == 4);
  CHECK(h.is_normal);
  CHECK(center(g).order == 2);
  const auto as_group = subgroup_as_group(g, h, "C4");
  CHECK(as_group.order() == 4);
  CHECK(as_group.is_abelian());
  CHECK(factorize(360) == std::vector<std::pair<std::size_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}
