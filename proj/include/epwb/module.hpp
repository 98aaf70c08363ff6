#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "epwb/detail/hom_search.hpp"
#include "epwb/ring.hpp"

namespace epwb {

// Finite left module over a FiniteRing, presented as an indexed element set
// with full addition and scalar-action tables.
struct FiniteModule {
  RingPtr ring;
  int order = 0;
  Elem zero = 0;
  std::vector<Elem> add_tab;  // order*order
  std::vector<Elem> act_tab;  // ring order x module order
  std::vector<Elem> neg_tab;
  Json spec;             // canonical module spec (without the ring)
  std::string spec_key;  // canonical_dump of {"module":spec,"ring":ring spec}

  Elem add(Elem a, Elem b) const {
    return add_tab[static_cast<size_t>(a) * order + b];
  }
  Elem act(Elem r, Elem a) const {
    return act_tab[static_cast<size_t>(r) * order + a];
  }
  Elem neg(Elem a) const { return neg_tab[static_cast<size_t>(a)]; }
  detail::TableView view() const {
    return detail::TableView{order, ring->order, add_tab.data(),
                             act_tab.data(), zero};
  }
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

// Submodule in canonical form: strictly increasing element indices.
struct Submodule {
  std::vector<Elem> elements;

  bool contains(Elem x) const;
  size_t size() const { return elements.size(); }
  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.elements == b.elements;
  }
};

bool submodule_less(const Submodule& a, const Submodule& b);

// Additive, equivariant map between modules over the same ring, total on the
// source.
struct ModuleMap {
  ModulePtr source, target;
  std::vector<Elem> images;  // one image per source element
};

// Builds a module over `ring` from a spec.  Kinds:
//   {"kind":"regular"}                     the ring acting on itself
//   {"kind":"matrix-cols","k":K}           M x K matrices over GF(q) under a
//                                          matrix ring M_M(GF(q)); rejected
//                                          for non-matrix rings
//   {"kind":"power","base":SPEC,"n":K}     direct power of another module
//   {"kind":"tables","add":..,"act":..}    raw tables, zero derived
// All kinds are validated exhaustively; the first violated axiom is named.
ModulePtr build_module(const RingPtr& ring, const Json& spec);

// Exhaustive axiom check; throws SpecError naming the first violated axiom.
void validate_module(const FiniteModule& a);

// {r in R : r*a = 0}, always a left ideal.
LeftIdeal annihilator(const FiniteModule& a, Elem x);

struct RhoClass {
  LeftIdeal ann;              // shared annihilator of the members
  std::vector<Elem> members;  // ascending
};

// Partition of the elements by equal annihilator, classes ordered by their
// smallest member.
std::vector<RhoClass> rho_classes(const FiniteModule& a);

// Smallest submodule containing x, i.e. {r*x : r in R}.
Submodule cyclic_submodule(const FiniteModule& a, Elem x);

// All submodules, sorted by (cardinality, lexicographic element order).
// Breadth-first closure by single-element extensions from the zero
// submodule; throws ResourceError past `max_count`.
std::vector<Submodule> submodules(const FiniteModule& a,
                                  size_t max_count = 100000);

// Sum of all minimal nonzero submodules (the zero submodule for a zero
// module).
Submodule socle(const FiniteModule& a);

// True when some single element of s generates s.
bool is_cyclic(const FiniteModule& a, const Submodule& s);

// Character module of (R,+): all group homomorphisms into Z/e, where e is
// the additive exponent of R.  Elements are value arrays in lexicographic
// order; R acts by (r*chi)(s) = chi(s*r).  Its order always equals |R|.
ModulePtr character_module(const RingPtr& ring);

// Value arrays backing the character module elements, index-aligned with it.
std::vector<std::vector<int>> character_value_arrays(const RingPtr& ring);

// Lexicographically first injective additive equivariant map from a into b,
// found by generator-image search.
std::optional<ModuleMap> embeds_in(const ModulePtr& a, const ModulePtr& b);

// All automorphism image arrays of a, in lexicographic order.
std::vector<std::vector<Elem>> automorphism_images(const FiniteModule& a);

// True when `images` is a bijective additive equivariant self-map of a.
bool is_automorphism(const FiniteModule& a, const std::vector<Elem>& images);

struct PseudoInjectivity {
  bool pseudo_injective = true;
  // set on failure: an injective equivariant map from a submodule into the
  // module that no automorphism extends
  std::optional<Submodule> witness_domain;
  std::vector<Elem> witness_images;  // aligned with witness_domain->elements
};

// Tests whether every injective equivariant map from a submodule into the
// module extends to an automorphism; the first failure in canonical order is
// returned as the witness.
PseudoInjectivity is_pseudo_injective(const FiniteModule& a);

std::vector<Elem> all_elements(int order);

}  // namespace epwb
