#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "epwb/cache.hpp"

using namespace epwb;
namespace fs = std::filesystem;

namespace {

std::string fresh_root(const std::string& tag) {
  fs::path p = fs::temp_directory_path() / ("epwb-test-" + tag);
  fs::remove_all(p);
  return p.string();
}

std::string entry_path(const std::string& root, const std::string& key) {
  return root + "/" + hex64(fnv1a(key)) + ".json";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  out << text;
}

ModulePtr z4_regular() {
  return build_module(build_ring(Json{{"kind", "zn"}, {"n", 4}}),
                      Json{{"kind", "regular"}});
}

}  // namespace

TEST_CASE("put and get round-trip") {
  Cache c(fresh_root("roundtrip"));
  CHECK(c.enabled());
  CHECK_FALSE(c.get("nothing").has_value());

  Json payload{{"values", {1, 2, 3}}, {"name", "x"}};
  c.put("k1", payload);
  auto back = c.get("k1");
  REQUIRE(back.has_value());
  CHECK(*back == payload);
  CHECK(fs::exists(entry_path(c.root(), "k1")));
  CHECK_FALSE(fs::exists(entry_path(c.root(), "k1") + ".tmp"));
}

TEST_CASE("stale or unreadable entries are discarded") {
  Cache c(fresh_root("stale"));
  c.put("k", Json{{"v", 1}});

  write_file(entry_path(c.root(), "k"),
             R"({"version":"other-version","key":"k","payload":{"v":1}})");
  CHECK_FALSE(c.get("k").has_value());

  write_file(entry_path(c.root(), "k"),
             R"({"version":"epwb-cache-1","key":"different","payload":{"v":1}})");
  CHECK_FALSE(c.get("k").has_value());

  write_file(entry_path(c.root(), "k"), "{ not json at all");
  CHECK_FALSE(c.get("k").has_value());

  // a fresh put repairs the slot
  c.put("k", Json{{"v", 2}});
  auto back = c.get("k");
  REQUIRE(back.has_value());
  CHECK((*back)["v"] == 2);
}

TEST_CASE("clear removes cache files only") {
  Cache c(fresh_root("clear"));
  c.put("a", Json{{"x", 1}});
  c.put("b", Json{{"x", 2}});
  write_file(c.root() + "/leftover.tmp", "partial");
  write_file(c.root() + "/readme.txt", "not a cache file");
  CHECK(c.clear() == 3);
  CHECK(fs::exists(c.root() + "/readme.txt"));
  CHECK(c.clear() == 0);
  CHECK_FALSE(c.get("a").has_value());
}

TEST_CASE("disabled cache is a no-op") {
  Cache c = Cache::disabled();
  CHECK_FALSE(c.enabled());
  c.put("k", Json{{"v", 1}});
  CHECK_FALSE(c.get("k").has_value());
  CHECK(c.clear() == 0);

  // computations still work without a backing store
  ModulePtr a = z4_regular();
  SymmetryGroup g = cached_aut_group(c, a);
  CHECK(g.size() == 2);
}

TEST_CASE("root selection from the environment") {
  std::string root = fresh_root("env");
  setenv("EPWB_CACHE", root.c_str(), 1);
  CHECK(Cache::from_env().root() == root);
  unsetenv("EPWB_CACHE");
  CHECK(Cache::from_env().root() == ".epwb-cache");
}

TEST_CASE("automorphism groups survive the cache") {
  ModulePtr a = z4_regular();
  Cache c(fresh_root("aut"));
  const std::string key = "aut|" + a->spec_key;

  SymmetryGroup fresh = cached_aut_group(c, a);
  CHECK(fs::exists(entry_path(c.root(), key)));

  SymmetryGroup hit = cached_aut_group(c, a);
  REQUIRE(hit.size() == fresh.size());
  for (int i = 0; i < hit.size(); ++i)
    CHECK(hit.elements[static_cast<size_t>(i)].images ==
          fresh.elements[static_cast<size_t>(i)].images);

  // tampering with the stored images forces a recompute and a repair; the
  // entry parses and matches the key, so rejection happens at revalidation
  Json bad{{"version", "epwb-cache-1"},
           {"key", key},
           {"payload", Json{{"images", Json::array({Json::array({0, 0, 0, 0})})}}}};
  write_file(entry_path(c.root(), key), bad.dump());
  SymmetryGroup repaired = cached_aut_group(c, a);
  CHECK(repaired.size() == fresh.size());
  auto payload = c.get(key);
  REQUIRE(payload.has_value());
  CHECK(payload->at("images").get<std::vector<std::vector<Elem>>>() ==
        automorphism_images(*a));
}

TEST_CASE("ideal and submodule lists survive the cache") {
  RingPtr r = build_ring(Json{{"kind", "zn"}, {"n", 8}});
  ModulePtr a = build_module(r, Json{{"kind", "regular"}});
  Cache c(fresh_root("lists"));

  auto ideals_direct = left_ideals(*r);
  auto ideals_first = cached_left_ideals(c, r);
  auto ideals_hit = cached_left_ideals(c, r);
  REQUIRE(ideals_hit.size() == ideals_direct.size());
  for (size_t i = 0; i < ideals_hit.size(); ++i) {
    CHECK(ideals_first[i].elements == ideals_direct[i].elements);
    CHECK(ideals_hit[i].elements == ideals_direct[i].elements);
  }

  auto subs_direct = submodules(*a);
  cached_submodules(c, a);
  auto subs_hit = cached_submodules(c, a);
  REQUIRE(subs_hit.size() == subs_direct.size());
  for (size_t i = 0; i < subs_hit.size(); ++i)
    CHECK(subs_hit[i].elements == subs_direct[i].elements);

  // a non-closed stored list fails revalidation and gets recomputed
  const std::string key = "ideals|" + r->spec_key;
  Json bad{{"version", "epwb-cache-1"},
           {"key", key},
           {"payload", Json{{"ideals", Json::array({Json::array({0, 1})})}}}};
  write_file(entry_path(c.root(), key), bad.dump());
  auto ideals_repaired = cached_left_ideals(c, r);
  REQUIRE(ideals_repaired.size() == ideals_direct.size());
  for (size_t i = 0; i < ideals_repaired.size(); ++i)
    CHECK(ideals_repaired[i].elements == ideals_direct[i].elements);
}
