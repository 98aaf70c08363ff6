#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "epwb/weights.hpp"
#include "oracle.hpp"

using namespace epwb;

namespace {

ModulePtr z4_regular() {
  return build_module(build_ring(Json{{"kind", "zn"}, {"n", 4}}),
                      Json{{"kind", "regular"}});
}

ModulePtr m21() {
  RingPtr m2 = build_ring(Json{{"kind", "matrix"}, {"q", 2}, {"m", 2}});
  return build_module(m2, Json{{"kind", "matrix-cols"}, {"k", 1}});
}

}  // namespace

TEST_CASE("weight kind names round-trip") {
  for (WeightKind k : {WeightKind::hamming, WeightKind::swc, WeightKind::aw})
    CHECK(weight_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(weight_kind_from_string("lee"), SpecError);
}

TEST_CASE("profiles on z/4") {
  ModulePtr a = z4_regular();
  WeightContext ctx = make_weight_context(a, aut_group(a));
  Word x{0, 1, 2, 3};

  CHECK(hamming_weight(*a, x) == 3);
  CHECK(profile_counts(ctx, WeightKind::hamming, x) == std::vector<int>{3});
  // orbits of z/4 under negation: {0}, {1,3}, {2}
  CHECK(profile_counts(ctx, WeightKind::swc, x) == std::vector<int>{1, 2, 1});
  CHECK(profile_counts(ctx, WeightKind::aw, x) == std::vector<int>{1, 2, 1});

  Json h = profile_json(ctx, WeightKind::hamming, x);
  CHECK(h["kind"] == "hamming");
  CHECK(h["count"] == 3);

  Json s = profile_json(ctx, WeightKind::swc, Word{2, 2});
  CHECK(s["kind"] == "swc");
  REQUIRE(s["counts"].size() == 1);  // zero counts dropped
  CHECK(s["counts"][0]["rep"] == 2);
  CHECK(s["counts"][0]["n"] == 2);

  Json w = profile_json(ctx, WeightKind::aw, Word{2, 1});
  CHECK(w["kind"] == "aw");
  REQUIRE(w["counts"].size() == 2);
  // entries follow the canonical ideal order: {0} before {0,2}
  CHECK(w["counts"][0]["ideal"] == Json::array({0}));
  CHECK(w["counts"][0]["n"] == 1);
  CHECK(w["counts"][1]["ideal"] == Json::array({0, 2}));
}

TEST_CASE("profile equality distinguishes the swc counterexample words") {
  ModulePtr a = z4_regular();
  WeightContext ctx = make_weight_context(a, aut_group(a));
  // (2,2) and (2,0) have equal Hamming weight? no: 2 vs 1; but (1,1) and
  // (3,3) agree on every profile because 3 = -1 lies in the orbit of 1
  CHECK(profile_counts(ctx, WeightKind::swc, Word{1, 1}) ==
        profile_counts(ctx, WeightKind::swc, Word{3, 3}));
  CHECK(profile_counts(ctx, WeightKind::swc, Word{1, 1}) !=
        profile_counts(ctx, WeightKind::swc, Word{2, 2}));
  CHECK(profile_preserved(ctx, WeightKind::aw, {Word{1, 2}}, {Word{3, 2}}));
  // profiles ignore coordinate order
  CHECK(profile_preserved(ctx, WeightKind::aw, {Word{1, 2}}, {Word{2, 1}}));
  CHECK_FALSE(profile_preserved(ctx, WeightKind::aw, {Word{1, 2}}, {Word{1, 1}}));
  CHECK_FALSE(profile_preserved(ctx, WeightKind::hamming, {Word{1, 0}},
                                {Word{1, 0}, Word{2, 2}}));
}

TEST_CASE("swc under a subgroup refines the full-group profile") {
  ModulePtr a = z4_regular();
  WeightContext full = make_weight_context(a, aut_group(a));
  WeightContext none = make_weight_context(a, subgroup_closure(a, {}));
  // under the trivial group each element is its own orbit
  CHECK(profile_counts(none, WeightKind::swc, Word{1, 3}) ==
        std::vector<int>{0, 1, 0, 1});
  CHECK(profile_counts(full, WeightKind::swc, Word{1, 3}) ==
        std::vector<int>{0, 2, 0});
}

TEST_CASE("profiles are invariant under monomial transformations") {
  std::mt19937_64 rng(20260814);
  for (ModulePtr a : {z4_regular(), m21()}) {
    SymmetryGroup g = aut_group(a);
    WeightContext ctx = make_weight_context(a, g);
    const int n = 5;
    for (int trial = 0; trial < 1000; ++trial) {
      Word x = random_word(*a, n, rng);
      MonomialTransformation t = random_monomial(g, n, rng);
      Word y = apply_monomial(g, t, x);
      for (WeightKind k : {WeightKind::hamming, WeightKind::swc, WeightKind::aw}) {
        auto px = profile_counts(ctx, k, x);
        CHECK(px == profile_counts(ctx, k, y));
        int total = 0;
        for (int v : px) total += v;
        CHECK(total == (k == WeightKind::hamming ? hamming_weight(*a, x) : n));
      }
      // the Hamming weight is recoverable from the zero-class entry
      auto swc = profile_counts(ctx, WeightKind::swc, x);
      CHECK(n - swc[static_cast<size_t>(
                 ctx.orbit.orbit_of[static_cast<size_t>(a->zero)])] ==
            hamming_weight(*a, x));
      auto aw = profile_counts(ctx, WeightKind::aw, x);
      CHECK(n - aw[static_cast<size_t>(
                ctx.rho_of[static_cast<size_t>(a->zero)])] ==
            hamming_weight(*a, x));
    }
  }
}
