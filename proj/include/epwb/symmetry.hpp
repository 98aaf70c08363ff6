#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "epwb/module.hpp"

namespace epwb {

// Module automorphism applied on the right: a |-> images[a].
struct Automorphism {
  std::vector<Elem> images;
  std::vector<Elem> inverse;
};

// Subgroup of the automorphism group of a module; elements are kept in
// lexicographic order of their image arrays (the identity is always first).
struct SymmetryGroup {
  ModulePtr module;
  std::vector<Automorphism> elements;
  int identity = 0;
  std::vector<int> comp_tab;  // size*size; entry (i,j) = "apply i, then j"
  std::vector<int> inv_tab;

  int size() const { return static_cast<int>(elements.size()); }
  int compose(int i, int j) const {
    return comp_tab[static_cast<size_t>(i) * elements.size() +
                    static_cast<size_t>(j)];
  }
  int inverse(int i) const { return inv_tab[static_cast<size_t>(i)]; }
  Elem apply(int i, Elem x) const {
    return elements[static_cast<size_t>(i)].images[static_cast<size_t>(x)];
  }
  // index of the automorphism with these images, or -1
  int find(const std::vector<Elem>& images) const;
};

// Full automorphism group by generator-image search.
SymmetryGroup aut_group(const ModulePtr& a);

// Smallest subgroup containing the given automorphisms; the empty list gives
// the trivial group.  Non-automorphism inputs are rejected.
SymmetryGroup subgroup_closure(const ModulePtr& a,
                               const std::vector<std::vector<Elem>>& gens);

// Wraps an already-closed element list (validated) into a group.
SymmetryGroup group_from_images(const ModulePtr& a,
                                std::vector<std::vector<Elem>> images);

// Orbit partition of the module elements under a group, orbits ordered by
// their smallest element (the representative).
struct OrbitIndex {
  int orbit_count = 0;
  std::vector<int> orbit_of;         // per element
  std::vector<Elem> representative;  // per orbit
};

OrbitIndex orbits(const FiniteModule& a, const SymmetryGroup& g);

// Coordinate permutation combined with per-coordinate automorphisms:
// y[i] = tau_i(x[sigma[i]]).
struct MonomialTransformation {
  int n = 0;
  std::vector<int> sigma;  // permutation of 0..n-1
  std::vector<int> taus;   // indices into the group
};

Word apply_monomial(const SymmetryGroup& g, const MonomialTransformation& t,
                    const Word& x);

// x (first then second) composed into a single transformation.
MonomialTransformation compose_monomial(const SymmetryGroup& g,
                                        const MonomialTransformation& first,
                                        const MonomialTransformation& second);

MonomialTransformation inverse_monomial(const SymmetryGroup& g,
                                        const MonomialTransformation& t);

// Seeded sampling helpers.  Both draw with plain modulo reduction so the
// result depends only on the engine's output sequence, not on library
// distribution internals.
MonomialTransformation random_monomial(const SymmetryGroup& g, int n,
                                       std::mt19937_64& rng);
Word random_word(const FiniteModule& a, int n, std::mt19937_64& rng);

// Compares the orbit partition under the full automorphism group with the
// equal-annihilator partition, alongside the pseudo-injectivity test.
struct PartitionComparison {
  bool pseudo_injective = false;
  bool partitions_equal = false;
  bool orbits_refine_rho = false;
  std::vector<std::vector<Elem>> orbit_partition;
  std::vector<std::vector<Elem>> rho_partition;
};

PartitionComparison compare_orbit_rho_partitions(const ModulePtr& a);

}  // namespace epwb
