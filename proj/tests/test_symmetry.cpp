#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "epwb/symmetry.hpp"
#include "oracle.hpp"

using namespace epwb;

namespace {

ModulePtr z4_regular() {
  return build_module(build_ring(Json{{"kind", "zn"}, {"n", 4}}),
                      Json{{"kind", "regular"}});
}

ModulePtr f2_squared() {
  return build_module(build_ring(Json{{"kind", "gf"}, {"q", 2}}),
                      Json{{"kind", "power"}, {"base", Json{{"kind", "regular"}}}, {"n", 2}});
}

}  // namespace

TEST_CASE("automorphism group of z/4") {
  SymmetryGroup g = aut_group(z4_regular());
  REQUIRE(g.size() == 2);
  CHECK(g.identity == 0);
  CHECK(g.elements[0].images == std::vector<Elem>{0, 1, 2, 3});
  CHECK(g.elements[1].images == std::vector<Elem>{0, 3, 2, 1});
  CHECK(g.compose(1, 1) == 0);
  CHECK(g.inverse(1) == 1);
  CHECK(g.find(std::vector<Elem>{0, 3, 2, 1}) == 1);
  CHECK(g.find(std::vector<Elem>{1, 0, 2, 3}) == -1);
}

TEST_CASE("automorphism group of the rank-two alphabet is S3") {
  SymmetryGroup g = aut_group(f2_squared());
  REQUIRE(g.size() == 6);
  CHECK(g.identity == 0);
  // group table sanity: closure, inverses, associativity on indices
  for (int i = 0; i < 6; ++i) {
    CHECK(g.compose(i, g.inverse(i)) == g.identity);
    CHECK(g.compose(g.identity, i) == i);
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        CHECK(g.compose(g.compose(i, j), k) == g.compose(i, g.compose(j, k)));
  }
}

TEST_CASE("subgroup closure") {
  ModulePtr a = f2_squared();
  SymmetryGroup trivial = subgroup_closure(a, {});
  CHECK(trivial.size() == 1);

  // swapping the two basis vectors generates a 2-element subgroup
  SymmetryGroup swap2 = subgroup_closure(a, {{0, 2, 1, 3}});
  CHECK(swap2.size() == 2);

  // a 3-cycle on the nonzero vectors generates a 3-element subgroup
  SymmetryGroup rot = subgroup_closure(a, {{0, 2, 3, 1}});
  CHECK(rot.size() == 3);

  CHECK_THROWS_AS(subgroup_closure(a, {{0, 0, 1, 2}}), SpecError);
  CHECK_THROWS_AS(subgroup_closure(a, {{1, 0, 2, 3}}), SpecError);
}

TEST_CASE("orbits") {
  ModulePtr a = f2_squared();
  OrbitIndex full = orbits(*a, aut_group(a));
  CHECK(full.orbit_count == 2);
  CHECK(full.representative == std::vector<Elem>{0, 1});
  CHECK(full.orbit_of == std::vector<int>{0, 1, 1, 1});

  OrbitIndex none = orbits(*a, subgroup_closure(a, {}));
  CHECK(none.orbit_count == 4);
}

TEST_CASE("monomial transformations compose and invert") {
  ModulePtr a = z4_regular();
  SymmetryGroup g = aut_group(a);
  std::mt19937_64 rng(42);
  const int n = 4;
  for (int trial = 0; trial < 200; ++trial) {
    MonomialTransformation t1 = random_monomial(g, n, rng);
    MonomialTransformation t2 = random_monomial(g, n, rng);
    Word x = random_word(*a, n, rng);
    Word via_two = apply_monomial(g, t2, apply_monomial(g, t1, x));
    MonomialTransformation both = compose_monomial(g, t1, t2);
    CHECK(apply_monomial(g, both, x) == via_two);
    MonomialTransformation inv = inverse_monomial(g, t1);
    CHECK(apply_monomial(g, inv, apply_monomial(g, t1, x)) == x);
  }
}

TEST_CASE("monomial length mismatch is rejected") {
  ModulePtr a = z4_regular();
  SymmetryGroup g = aut_group(a);
  MonomialTransformation t{2, {0, 1}, {0, 0}};
  CHECK_THROWS_AS(apply_monomial(g, t, Word{1, 2, 3}), SpecError);
}

TEST_CASE("orbit and annihilator partitions coincide on pseudo-injective alphabets") {
  for (ModulePtr a : {z4_regular(), f2_squared()}) {
    PartitionComparison cmp = compare_orbit_rho_partitions(a);
    CHECK(cmp.pseudo_injective);
    CHECK(cmp.partitions_equal);
    CHECK(cmp.orbits_refine_rho);
  }
}

TEST_CASE("orbit partition strictly refines on z/2 x z/8") {
  ModulePtr mixed = build_module(build_ring(Json{{"kind", "zn"}, {"n", 8}}),
                                 oracle::z2xz8_module_spec());
  PartitionComparison cmp = compare_orbit_rho_partitions(mixed);
  CHECK_FALSE(cmp.pseudo_injective);
  CHECK_FALSE(cmp.partitions_equal);
  CHECK(cmp.orbits_refine_rho);

  // elements (0,4)=4, (1,0)=8, (1,4)=12 share the annihilator {0,2,4,6} but
  // (0,4) lies in the 2-torsion image 2M while the others do not
  std::vector<Elem> fused{4, 8, 12};
  bool found_rho = false;
  for (const auto& cls : cmp.rho_partition)
    if (cls == fused) found_rho = true;
  CHECK(found_rho);
  bool orbit_splits = true;
  for (const auto& orb : cmp.orbit_partition)
    if (orb == fused) orbit_splits = false;
  CHECK(orbit_splits);
}
