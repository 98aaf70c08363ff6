#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "epwb/module.hpp"
#include "epwb/ring.hpp"
#include "epwb/symmetry.hpp"
#include "epwb/weights.hpp"

namespace epwb {

// Resource guards and search budgets.  Exceeding a hard guard raises
// ResourceError; the budgets make a scan stop early with an inconclusive
// verdict instead.
struct Bounds {
  size_t word_bound = 100000;      // max codewords in a single span
  size_t max_codes = 2000000;      // max distinct codes per length
  size_t max_tuples = 20000000;    // max |A|^n tuples enumerated per length
  size_t code_table_limit = 4096;  // max codewords for isomorphism search
  uint64_t budget_pairs = 0;       // 0 = unlimited
};

// Left submodule of A^n.  words is the full sorted codeword list; generators
// is the canonical greedy generating sequence.
struct Code {
  ModulePtr ambient;
  int n = 0;
  std::vector<Word> generators;
  std::vector<Word> words;
};

Code span_code(const ModulePtr& a, int n, const std::vector<Word>& gens,
               size_t word_bound);

// Greedy generating sequence: repeatedly take the smallest codeword outside
// the span so far.  Empty for the zero code.
std::vector<Word> canonical_generators(const ModulePtr& a,
                                       const std::vector<Word>& words);

// All distinct codes in A^n spanned by at most gen_max tuples, ordered by
// (codeword count, lexicographic word list).
std::vector<Code> enumerate_codes(const ModulePtr& a, int n, int gen_max,
                                  const Bounds& bounds);

// Addition/action tables over codeword indices, so the homomorphism search
// can treat a code as a module in its own right.
struct CodeTable {
  const Code* code = nullptr;
  int words = 0;
  std::vector<Elem> add_tab;  // words x words
  std::vector<Elem> act_tab;  // ring order x words
  Elem zero_index = 0;

  detail::TableView view() const;
};

CodeTable make_code_table(const Code& c, size_t limit);

int word_index(const Code& c, const Word& w);  // -1 if absent

// Module isomorphism between two codes, stored as the target word index for
// each source word index plus the images of the canonical generators.
struct LinearIso {
  std::vector<int> word_map;
  std::vector<Word> gen_images;
};

// Visits the module isomorphisms c1 -> c2 in lexicographic order of the
// generator image tuple, optionally keeping only the ones that preserve the
// given weight profile wordwise.  Stops when the visitor returns false.
void for_each_isomorphism(const Code& c1, const Code& c2,
                          const WeightContext* ctx, WeightKind kind,
                          bool filtered, const Bounds& bounds,
                          const std::function<bool(const LinearIso&)>& visit);

std::vector<LinearIso> linear_isomorphisms(const Code& c1, const Code& c2,
                                           const Bounds& bounds);

std::vector<LinearIso> preserving_isomorphisms(const Code& c1, const Code& c2,
                                               const WeightContext& ctx,
                                               WeightKind kind,
                                               const Bounds& bounds);

// Searches for a monomial transformation agreeing with the isomorphism on
// every codeword.  Permutations are tried in lexicographic order and each
// coordinate takes the smallest fitting automorphism, so the result is
// deterministic.  When none exists, searched reports the number of
// (permutation, automorphism tuple) combinations ruled out: n! * |G|^n.
struct MonomialExtension {
  bool found = false;
  MonomialTransformation transform;
  uint64_t searched = 0;
};

MonomialExtension extend_to_monomial(const Code& c1, const Code& c2,
                                     const LinearIso& f,
                                     const SymmetryGroup& g);

// One stage of a coordinate-peeling certificate: the recorded ideal, the
// element acting on the codeword, and how many coordinates it kills on each
// side (among the coordinates still in play, for the idempotent method).
struct PeelStage {
  std::vector<Elem> ideal;
  Elem actor = 0;
  int count_source = 0;
  int count_target = 0;
};

struct CodewordPeel {
  int word = 0;  // source codeword index
  std::vector<PeelStage> stages;
};

struct PeelViolation {
  int word = 0;
  size_t stage = 0;
};

struct PreservationCertificate {
  bool complete = false;
  std::string method;  // "chain" or "idempotent"
  std::vector<CodewordPeel> codewords;
  std::optional<PeelViolation> violation;
};

// For a Hamming-weight-preserving isomorphism over a chain ring: at each
// ideal level, multiplying a codeword by the level representative must kill
// the same number of coordinates on both sides.
PreservationCertificate chain_peel_certificate(const Code& c1, const Code& c2,
                                               const LinearIso& f,
                                               const std::vector<ChainLevel>& levels);

// Over a simple ring: repeatedly act by an idempotent generating a maximal
// annihilator among the remaining coordinates, matching and removing the
// killed coordinates on both sides.
PreservationCertificate idempotent_peel_certificate(const Code& c1,
                                                    const Code& c2,
                                                    const LinearIso& f);

// Ordered pairs (i, j), self-pairs included, restricted to codes whose
// wordwise profile multisets agree; any isomorphism preserving the profile
// can only connect such codes.  Ordered by (i, j).
std::vector<std::pair<uint32_t, uint32_t>> profile_matched_pairs(
    const std::vector<Code>& codes, const WeightContext& ctx, WeightKind kind);

// Per-length statistics of a scan.
struct SpaceLevel {
  int n = 0;
  uint64_t codes = 0;
  uint64_t pairs_total = 0;
  uint64_t pairs_scanned = 0;
  uint64_t isomorphisms = 0;
  uint64_t extended = 0;
};

struct EPWitness {
  int n = 0;
  Code source;
  Code target;
  LinearIso iso;
  uint64_t sigma_tau_space = 0;
};

// verdict: "counterexample" when a non-extendable isomorphism was found,
// "completed" when the whole space up to n_max was covered, "inconclusive"
// when a guard or budget cut the scan short (note says which).
struct EPOutcome {
  std::string verdict;
  std::string note;
  std::optional<EPWitness> witness;
  std::vector<SpaceLevel> space;
};

// Scans all ordered pairs of codes with matching profile multisets for each
// length n_from..n_max, enumerating profile-preserving isomorphisms and
// trying to extend each.  Deterministic for any jobs count: the witness is
// minimal in (n, pair order, isomorphism order) and statistics cover the pair
// prefix up to the witness.
EPOutcome ep_scan(const ModulePtr& a, const SymmetryGroup& g, WeightKind kind,
                  int n_from, int n_max, int gen_max, const Bounds& bounds,
                  int jobs);

// Checks that swc preservation (under the full automorphism group) and aw
// preservation each imply Hamming preservation across all code isomorphisms
// up to the given bounds.
struct ImplicationCheck {
  uint64_t isomorphisms = 0;
  uint64_t swc_preserving = 0;
  uint64_t aw_preserving = 0;
  uint64_t hamming_preserving = 0;
  uint64_t violations = 0;
};

ImplicationCheck weight_implication_check(const ModulePtr& a,
                                          const SymmetryGroup& g, int n_max,
                                          int gen_max, const Bounds& bounds);

}  // namespace epwb
