#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "epwb/ring.hpp"
#include "oracle.hpp"

using namespace epwb;

namespace {

std::vector<std::vector<Elem>> ideal_lists(const std::vector<LeftIdeal>& v) {
  std::vector<std::vector<Elem>> out;
  for (const auto& i : v) out.push_back(i.elements);
  return out;
}

}  // namespace

TEST_CASE("left ideal lattice matches the subset oracle") {
  for (int n : {2, 3, 4, 6, 8, 9, 12}) {
    RingPtr r = build_ring(Json{{"kind", "zn"}, {"n", n}});
    CHECK(ideal_lists(left_ideals(*r)) == oracle::brute_left_ideals(*r));
  }
  RingPtr m2 = build_ring(Json{{"kind", "matrix"}, {"q", 2}, {"m", 2}});
  CHECK(ideal_lists(left_ideals(*m2)) == oracle::brute_left_ideals(*m2));
  RingPtr c8 = build_ring(Json{{"kind", "chain"}, {"p", 2}, {"e", 3}});
  CHECK(ideal_lists(left_ideals(*c8)) == oracle::brute_left_ideals(*c8));
}

TEST_CASE("z/4 structure") {
  RingPtr r = build_ring(Json{{"kind", "zn"}, {"n", 4}});
  CHECK(r->order == 4);
  CHECK(r->one == 1);
  CHECK(r->add(3, 3) == 2);
  CHECK(r->mul(2, 2) == 0);
  CHECK(r->neg(1) == 3);
  CHECK_NOTHROW(validate_ring(*r));

  auto ideals = left_ideals(*r);
  REQUIRE(ideals.size() == 3);
  CHECK(ideals[0].elements == std::vector<Elem>{0});
  CHECK(ideals[1].elements == std::vector<Elem>{0, 2});
  CHECK(ideals[2].elements == std::vector<Elem>{0, 1, 2, 3});

  CHECK(jacobson_radical(*r).elements == std::vector<Elem>{0, 2});
  auto maximal = maximal_left_ideals(*r);
  REQUIRE(maximal.size() == 1);
  CHECK(maximal[0].elements == std::vector<Elem>{0, 2});
  CHECK(is_chain_ring(*r));
  CHECK_FALSE(is_simple_ring(*r));

  auto levels = chain_levels(*r);
  REQUIRE(levels.size() == 3);
  CHECK(levels[0].representative == 1);
  CHECK(levels[1].representative == 2);
  CHECK(levels[2].representative == 0);
  CHECK(levels[0].ideal.elements.size() == 4);
  CHECK(levels[2].ideal.elements == std::vector<Elem>{0});
}

TEST_CASE("z/8 chain levels") {
  RingPtr r = build_ring(Json{{"kind", "zn"}, {"n", 8}});
  CHECK(left_ideals(*r).size() == 4);
  auto levels = chain_levels(*r);
  REQUIRE(levels.size() == 4);
  CHECK(levels[0].representative == 1);
  CHECK(levels[1].representative == 2);
  CHECK(levels[2].representative == 4);
  CHECK(levels[3].representative == 0);
}

TEST_CASE("z/6 is not a chain ring") {
  RingPtr r = build_ring(Json{{"kind", "zn"}, {"n", 6}});
  CHECK(left_ideals(*r).size() == 4);
  CHECK_FALSE(is_chain_ring(*r));
  CHECK_THROWS_AS(chain_levels(*r), SpecError);
  try {
    chain_levels(*r);
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("not a chain ring") != std::string::npos);
  }
}

TEST_CASE("galois field gf(4)") {
  RingPtr r = build_ring(Json{{"kind", "gf"}, {"q", 4}});
  CHECK(r->order == 4);
  CHECK_NOTHROW(validate_ring(*r));
  // elements are base-2 digit strings in x: 2 = x, 3 = x + 1, and the modulus
  // is x^2 + x + 1, so x * x = x + 1
  CHECK(r->mul(2, 2) == 3);
  CHECK(r->mul(2, 3) == 1);
  CHECK(left_ideals(*r).size() == 2);
  CHECK(is_simple_ring(*r));
  CHECK(is_chain_ring(*r));

  CHECK_THROWS_AS(build_ring(Json{{"kind", "gf"}, {"q", 6}}), SpecError);
  CHECK_THROWS_AS(build_ring(Json{{"kind", "gf"}, {"q", 1}}), SpecError);
}

TEST_CASE("matrix ring m2(f2)") {
  RingPtr r = build_ring(Json{{"kind", "matrix"}, {"q", 2}, {"m", 2}});
  CHECK(r->order == 16);
  CHECK_NOTHROW(validate_ring(*r));
  // identity matrix has digits (1,0,0,1) read row-major from entry (0,0)
  CHECK(r->one == 9);

  auto ideals = left_ideals(*r);
  CHECK(ideals.size() == 5);
  CHECK(two_sided_ideals(*r).size() == 2);
  CHECK(jacobson_radical(*r).elements == std::vector<Elem>{0});
  CHECK(is_simple_ring(*r));
  CHECK_FALSE(is_chain_ring(*r));

  // in a simple ring every left ideal is generated by an idempotent
  for (const auto& ideal : ideals) {
    auto e = idempotent_generator(*r, ideal);
    REQUIRE(e.has_value());
    CHECK(r->mul(*e, *e) == *e);
    CHECK(principal_left_ideal(*r, *e).elements == ideal.elements);
  }
}

TEST_CASE("chain ring f2[x]/(x^3)") {
  RingPtr r = build_ring(Json{{"kind", "chain"}, {"p", 2}, {"e", 3}});
  CHECK(r->order == 8);
  CHECK_NOTHROW(validate_ring(*r));
  // element 2 encodes x; x^3 = 0
  CHECK(r->mul(2, 2) == 4);
  CHECK(r->mul(2, 4) == 0);
  CHECK(is_chain_ring(*r));
  CHECK(left_ideals(*r).size() == 4);
  CHECK_FALSE(is_simple_ring(*r));
}

TEST_CASE("chain ring over a prime power base gf(4)[x]/(x^2)") {
  RingPtr r = build_ring(Json{{"kind", "chain"}, {"p", 4}, {"e", 2}});
  CHECK(r->order == 16);
  CHECK_NOTHROW(validate_ring(*r));
  CHECK(is_chain_ring(*r));
  CHECK(left_ideals(*r).size() == 3);
}

TEST_CASE("principal ideals") {
  RingPtr r = build_ring(Json{{"kind", "zn"}, {"n", 8}});
  CHECK(principal_left_ideal(*r, 2).elements == std::vector<Elem>{0, 2, 4, 6});
  CHECK(principal_left_ideal(*r, 3).elements.size() == 8);
  CHECK(principal_left_ideal(*r, 0).elements == std::vector<Elem>{0});
}

TEST_CASE("no idempotent generator for the radical of z/4") {
  RingPtr r = build_ring(Json{{"kind", "zn"}, {"n", 4}});
  LeftIdeal rad = jacobson_radical(*r);
  CHECK_FALSE(idempotent_generator(*r, rad).has_value());
}

TEST_CASE("tables kind and axiom naming") {
  Json good{{"kind", "tables"},
            {"add", Json::array({Json::array({0, 1}), Json::array({1, 0})})},
            {"mul", Json::array({Json::array({0, 0}), Json::array({0, 1})})},
            {"zero", 0},
            {"one", 1}};
  RingPtr r = build_ring(good);
  CHECK(r->order == 2);
  CHECK(is_simple_ring(*r));

  Json bad = good;
  bad["add"] = Json::array({Json::array({0, 1}), Json::array({0, 0})});
  try {
    build_ring(bad);
    FAIL("expected a validation error");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("commutative") != std::string::npos);
  }

  Json bad_mul = good;
  bad_mul["mul"] = Json::array({Json::array({0, 1}), Json::array({0, 1})});
  CHECK_THROWS_AS(build_ring(bad_mul), SpecError);
}

TEST_CASE("spec errors carry context") {
  CHECK_THROWS_AS(build_ring(Json{{"kind", "nope"}}), SpecError);
  CHECK_THROWS_AS(build_ring(Json{{"kind", "zn"}, {"n", 1}}), SpecError);
  CHECK_THROWS_AS(build_ring(Json{{"kind", "zn"}, {"n", 1000}}), SpecError);
  CHECK_THROWS_AS(build_ring(Json::array()), SpecError);
  CHECK_THROWS_AS(build_ring(Json{{"kind", "matrix"}, {"q", 3}, {"m", 3}}),
                  SpecError);  // 3^9 over the order limit
}

TEST_CASE("canonical spec keys are stable") {
  RingPtr a = build_ring(Json{{"n", 4}, {"kind", "zn"}});
  RingPtr b = build_ring(Json{{"kind", "zn"}, {"n", 4}});
  CHECK(a->spec_key == b->spec_key);
  CHECK(canonical_dump(a->spec) == "{\"kind\":\"zn\",\"n\":4}");
}
