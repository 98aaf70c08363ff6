#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epwb/module.hpp"
#include "epwb/ring.hpp"
#include "epwb/symmetry.hpp"

namespace epwb {

enum class WeightKind { hamming, swc, aw };

std::string to_string(WeightKind k);
WeightKind weight_kind_from_string(const std::string& s);

// Precomputed per-element class data used by all three weight functions.
// The orbit index is taken from the symmetry group the caller works with; the
// annihilator classes are intrinsic to the module.
struct WeightContext {
  ModulePtr module;
  std::vector<int> rho_of;            // element -> annihilator class id
  std::vector<LeftIdeal> rho_ideals;  // per class id
  OrbitIndex orbit;                   // under the chosen group
};

WeightContext make_weight_context(const ModulePtr& a, const SymmetryGroup& g);

int hamming_weight(const FiniteModule& a, const Word& x);

// Compact per-class count vectors.  hamming yields a single-entry vector,
// swc counts per orbit, aw counts per annihilator class.  Zero entries are
// kept so vectors of the same kind are always comparable.
std::vector<int> profile_counts(const WeightContext& ctx, WeightKind kind,
                                const Word& x);

// Readable rendering of a profile; zero counts are dropped here.
Json profile_json(const WeightContext& ctx, WeightKind kind, const Word& x);

// True when the aligned word lists have equal profiles entry by entry.
bool profile_preserved(const WeightContext& ctx, WeightKind kind,
                       const std::vector<Word>& source,
                       const std::vector<Word>& image);

}  // namespace epwb
