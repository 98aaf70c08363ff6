#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epwb/cache.hpp"
#include "epwb/codes.hpp"
#include "epwb/common.hpp"
#include "epwb/module.hpp"
#include "epwb/ring.hpp"
#include "epwb/symmetry.hpp"
#include "epwb/weights.hpp"

namespace epwb {

// A fully described run: alphabet, symmetry group, weight, search window and
// budgets.  jobs is execution detail and never reaches the report.
struct Scenario {
  Json ring_spec;
  Json module_spec;
  Json group_spec = "full-aut";  // or "trivial", or a list of image arrays
  WeightKind kind = WeightKind::swc;
  std::string mode = "verify";  // verify | search | certify
  int n_from = 1;
  int n_max = 3;
  int gen_max = 2;
  Bounds bounds;
  int jobs = 1;
};

// Reads scenario fields from a JSON object; unknown keys are rejected.
Scenario scenario_from_json(const Json& j);

// Built objects for a scenario.  canonical is the sorted-key scenario echo
// used in reports, with ring and module specs in canonical form.
struct Workbench {
  Scenario scenario;
  RingPtr ring;
  ModulePtr module;
  SymmetryGroup group;
  bool group_is_full_aut = false;
  Json canonical;
};

Workbench make_workbench(const Scenario& s, const Cache& cache);

// Structural facts about the alphabet that decide the extension property.
struct Classification {
  bool pseudo_injective = false;
  bool socle_cyclic = false;
  bool embeds_in_character = false;
  bool partitions_equal = false;
  int rho_class_count = 0;
  int orbit_count = 0;
  int automorphisms = 0;
};

// Requires the full automorphism group of a.  Throws InternalInconsistency
// when the socle test and the character-module embedding disagree.
Classification classify_module(const ModulePtr& a, const SymmetryGroup& full_aut);

Json classification_json(const Classification& c);

// Theory-backed prediction for the given weight and group, when one exists:
// with the full automorphism group, the symmetrized weight follows the socle
// test, Hamming additionally needs pseudo-injectivity, and the annihilator
// weight matches the symmetrized one on pseudo-injective alphabets.
std::optional<bool> predicted_ep(const Classification& c, WeightKind kind,
                                 bool group_is_full_aut);

struct RunResult {
  Json report;
  int exit_code = 0;
};

RunResult run_ring_info(const Json& ring_spec, const Cache& cache);
RunResult run_module_info(const Json& ring_spec, const Json& module_spec,
                          const Cache& cache);
RunResult run_classify(const Json& ring_spec, const Json& module_spec,
                       const Cache& cache);

// verify and search run the pair scan; certify builds peel certificates for
// every Hamming-preserving isomorphism in the window.
RunResult run_ep(const Scenario& s, const Cache& cache);

// Plain-text rendering of any report produced above.
std::string render_text(const Json& report);

}  // namespace epwb
