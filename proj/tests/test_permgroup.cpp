#include <doctest.h>

#include <random>
#include <set>

#include "grouptope/permgroup.hpp"

using namespace grouptope;

TEST_CASE("cycle notation round trip") {
  auto p = Permutation::from_cycles("(0 1 2)(3 4)");
  CHECK(p.degree() == 5);
  CHECK(p(0) == 1);
  CHECK(p(2) == 0);
  CHECK(p(3) == 4);
  CHECK(Permutation::from_cycles(p.to_cycles()) == p);
  CHECK(Permutation::identity(4).to_cycles() == "()");
}

TEST_CASE("parse_group_spec families") {
  auto c3 = parse_group_spec("cyclic 3");
  CHECK(c3.kind == GroupSpec::Kind::Cyclic);
  CHECK(c3.param == 3);

  auto ex = parse_group_spec("gens (0 1 2)(3 4)");
  CHECK(ex.kind == GroupSpec::Kind::Explicit);
  REQUIRE(ex.generators.size() == 1);
  CHECK(ex.generators[0].degree() == 5);

  auto two = parse_group_spec("gens (0 1 2)(3 4) (0 1)");
  CHECK(two.generators.size() == 2);
  CHECK(two.generators[1].degree() == 5);  // extended to common degree

  CHECK_THROWS_AS(parse_group_spec("gens (0 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("frobnicate 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("cyclic -2"), std::invalid_argument);
}

TEST_CASE("group spec serializer round trips") {
  for (const char* text : {"cyclic 7", "dihedral 4", "symmetric 3", "klein4", "quaternion8",
                           "product cyclic 2 ; cyclic 4", "gens (0 1 2)(3 4) (0 1)"}) {
    auto spec = parse_group_spec(text);
    CHECK(serialize_group_spec(parse_group_spec(serialize_group_spec(spec))) ==
          serialize_group_spec(spec));
  }
}

TEST_CASE("realize_group orders") {
  CHECK(enumerate_elements(realize_group(parse_group_spec("cyclic 3"))).size() == 3);
  CHECK(enumerate_elements(realize_group(parse_group_spec("symmetric 3"))).size() == 6);
  CHECK(enumerate_elements(realize_group(parse_group_spec("quaternion8"))).size() == 8);
  CHECK(enumerate_elements(realize_group(parse_group_spec("product cyclic 2 ; cyclic 4"))).size() == 8);
  CHECK(order_of(realize_group(parse_group_spec("dihedral 6"))) == 12);
}

TEST_CASE("quaternion8 is not klein-like") {
  // exactly one element of order 2
  auto q8 = realize_group(parse_group_spec("quaternion8"));
  int involutions = 0;
  for (const auto& e : enumerate_elements(q8))
    if (!e.is_identity() && (e * e).is_identity()) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("enumerate_elements basics") {
  auto trivial = PermutationGroup(1, {});
  auto elems = enumerate_elements(trivial);
  REQUIRE(elems.size() == 1);
  CHECK(elems[0].is_identity());

  auto k4 = enumerate_elements(realize_group(parse_group_spec("klein4")));
  CHECK(k4.size() == 4);
  for (const auto& e : k4) CHECK((e * e).is_identity());
}

TEST_CASE("closure is a group") {
  auto g = realize_group(parse_group_spec("dihedral 4"));
  auto elems = enumerate_elements(g);
  std::set<Permutation> all(elems.begin(), elems.end());
  CHECK(all.count(Permutation::identity(g.degree())) == 1);
  std::mt19937 rng(7);
  std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
  for (int t = 0; t < 100; ++t) {
    const auto& a = elems[pick(rng)];
    const auto& b = elems[pick(rng)];
    CHECK(all.count(a * b) == 1);
    CHECK(all.count(a.inverse()) == 1);
  }
}

TEST_CASE("order_of") {
  CHECK(order_of(PermutationGroup(1, {})) == 1);
  CHECK(order_of(realize_group(parse_group_spec("symmetric 5"))) == 120);
  // above the enumeration guard: stabilizer chain path
  CHECK(order_of(realize_group(parse_group_spec("symmetric 9"))) == 362880);
  for (int k = 1; k <= 12; ++k) {
    auto g = realize_group(parse_group_spec("cyclic " + std::to_string(k)));
    CHECK(order_of(g) == k);
    CHECK(order_of(g) == BigInt(enumerate_elements(g).size()));
  }
}

TEST_CASE("minimum_generator_count") {
  CHECK(minimum_generator_count(realize_group(parse_group_spec("cyclic 7"))) == 1);
  CHECK(minimum_generator_count(realize_group(parse_group_spec("klein4"))) == 2);
  CHECK(minimum_generator_count(realize_group(parse_group_spec("quaternion8"))) == 2);
  CHECK(minimum_generator_count(PermutationGroup(1, {})) == 0);
}
