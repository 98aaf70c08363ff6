#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epwb/common.hpp"
#include "epwb/module.hpp"
#include "epwb/ring.hpp"
#include "epwb/symmetry.hpp"

namespace epwb {

// On-disk JSON cache for derived structures.  Entries store the format
// version and the full key; anything that fails to parse or revalidate is
// discarded and recomputed.  Writes go to a temp file first, then rename.
class Cache {
 public:
  explicit Cache(std::string root) : root_(std::move(root)) {}

  // root from EPWB_CACHE, falling back to ./.epwb-cache
  static Cache from_env();
  static Cache disabled() { return Cache(""); }

  bool enabled() const { return !root_.empty(); }
  const std::string& root() const { return root_; }

  std::optional<Json> get(const std::string& key) const;
  void put(const std::string& key, const Json& payload) const;
  size_t clear() const;

 private:
  std::string path_for(const std::string& key) const;
  std::string root_;
};

// Automorphism group backed by the cache.  Loaded image arrays are
// revalidated element by element and the list must be closed under
// composition; corrupt entries are dropped with a warning and recomputed.
SymmetryGroup cached_aut_group(const Cache& cache, const ModulePtr& a);

std::vector<LeftIdeal> cached_left_ideals(const Cache& cache, const RingPtr& r);

std::vector<Submodule> cached_submodules(const Cache& cache, const ModulePtr& a);

}  // namespace epwb
