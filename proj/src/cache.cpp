#include "epwb/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;

namespace epwb {

namespace {

constexpr const char* kCacheVersion = "epwb-cache-1";

void warn(const std::string& msg) { std::cerr << "epwb: warning: " << msg << "\n"; }

}  // namespace

Cache Cache::from_env() {
  const char* env = std::getenv("EPWB_CACHE");
  if (env != nullptr) return Cache(std::string(env));
  return Cache(".epwb-cache");
}

std::string Cache::path_for(const std::string& key) const {
  return root_ + "/" + hex64(fnv1a(key.data(), key.size())) + ".json";
}

std::optional<Json> Cache::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  Json j;
  try {
    in >> j;
  } catch (const std::exception&) {
    warn("discarding unreadable cache entry for key " + key);
    return std::nullopt;
  }
  if (!j.is_object() || j.value("version", "") != kCacheVersion ||
      j.value("key", "") != key) {
    warn("discarding stale cache entry for key " + key);
    return std::nullopt;
  }
  if (!j.contains("payload")) return std::nullopt;
  return j["payload"];
}

void Cache::put(const std::string& key, const Json& payload) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) {
    warn("cannot create cache directory " + root_ + ": " + ec.message());
    return;
  }
  Json j{{"key", key}, {"payload", payload}, {"version", kCacheVersion}};
  const std::string final_path = path_for(key);
  const std::string tmp_path = final_path + ".tmp";
  {
    std::ofstream out(tmp_path, std::ios::trunc);
    if (!out) {
      warn("cannot write cache entry " + tmp_path);
      return;
    }
    out << j.dump();
  }
  fs::rename(tmp_path, final_path, ec);
  if (ec) {
    warn("cannot finalize cache entry " + final_path + ": " + ec.message());
    fs::remove(tmp_path, ec);
  }
}

size_t Cache::clear() const {
  if (!enabled()) return 0;
  std::error_code ec;
  if (!fs::is_directory(root_, ec)) return 0;
  size_t removed = 0;
  for (const auto& entry : fs::directory_iterator(root_, ec)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext != ".json" && ext != ".tmp") continue;
    std::error_code rec;
    if (fs::remove(entry.path(), rec)) ++removed;
  }
  return removed;
}

SymmetryGroup cached_aut_group(const Cache& cache, const ModulePtr& a) {
  const std::string key = "aut|" + a->spec_key;
  if (auto payload = cache.get(key)) {
    try {
      std::vector<std::vector<Elem>> images =
          payload->at("images").get<std::vector<std::vector<Elem>>>();
      return group_from_images(a, std::move(images));
    } catch (const std::exception& e) {
      warn(std::string("cached automorphism group failed revalidation (") +
           e.what() + "); recomputing");
    }
  }
  std::vector<std::vector<Elem>> images = automorphism_images(*a);
  cache.put(key, Json{{"images", images}});
  return group_from_images(a, std::move(images));
}

std::vector<LeftIdeal> cached_left_ideals(const Cache& cache, const RingPtr& r) {
  const std::string key = "ideals|" + r->spec_key;
  auto wrap = [&](const std::vector<std::vector<Elem>>& lists) {
    std::vector<LeftIdeal> out;
    for (const auto& elems : lists) out.push_back(LeftIdeal{elems, r.get()});
    return out;
  };
  if (auto payload = cache.get(key)) {
    try {
      auto lists = payload->at("ideals").get<std::vector<std::vector<Elem>>>();
      std::vector<LeftIdeal> out = wrap(lists);
      for (const auto& ideal : out) {
        for (Elem x : ideal.elements) {
          if (x < 0 || x >= r->order)
            throw SpecError("element out of range");
          for (Elem y : ideal.elements)
            if (!ideal.contains(r->add(x, y)))
              throw SpecError("not closed under addition");
          for (Elem s = 0; s < r->order; ++s)
            if (!ideal.contains(r->mul(s, x)))
              throw SpecError("not closed under left multiplication");
        }
      }
      return out;
    } catch (const std::exception& e) {
      warn(std::string("cached ideal list failed revalidation (") + e.what() +
           "); recomputing");
    }
  }
  std::vector<LeftIdeal> out = left_ideals(*r);
  std::vector<std::vector<Elem>> lists;
  for (const auto& ideal : out) lists.push_back(ideal.elements);
  cache.put(key, Json{{"ideals", lists}});
  return out;
}

std::vector<Submodule> cached_submodules(const Cache& cache, const ModulePtr& a) {
  const std::string key = "submods|" + a->spec_key;
  if (auto payload = cache.get(key)) {
    try {
      auto lists = payload->at("submodules").get<std::vector<std::vector<Elem>>>();
      std::vector<Submodule> out;
      for (const auto& elems : lists) {
        Submodule s{elems};
        for (Elem x : s.elements) {
          if (x < 0 || x >= a->order) throw SpecError("element out of range");
          for (Elem y : s.elements)
            if (!s.contains(a->add(x, y)))
              throw SpecError("not closed under addition");
          for (Elem r = 0; r < a->ring->order; ++r)
            if (!s.contains(a->act(r, x)))
              throw SpecError("not closed under the action");
        }
        out.push_back(std::move(s));
      }
      return out;
    } catch (const std::exception& e) {
      warn(std::string("cached submodule list failed revalidation (") +
           e.what() + "); recomputing");
    }
  }
  std::vector<Submodule> out = submodules(*a);
  std::vector<std::vector<Elem>> lists;
  for (const auto& s : out) lists.push_back(s.elements);
  cache.put(key, Json{{"submodules", lists}});
  return out;
}

}  // namespace epwb
