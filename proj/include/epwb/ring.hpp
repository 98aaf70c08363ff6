#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "epwb/common.hpp"

namespace epwb {

using Json = nlohmann::json;

// Canonical serialization used for cache keys and report embedding:
// sorted keys, no whitespace.
std::string canonical_dump(const Json& j);

// Finite unital ring presented as an indexed element set with full
// addition and multiplication tables.
struct FiniteRing {
  int order = 0;
  Elem zero = 0;
  Elem one = 0;
  std::vector<Elem> add_tab;  // order*order, row-major
  std::vector<Elem> mul_tab;  // order*order, row-major
  std::vector<Elem> neg_tab;  // additive inverse per element
  Json spec;                  // canonical construction spec
  std::string spec_key;       // canonical_dump(spec)

  Elem add(Elem a, Elem b) const {
    return add_tab[static_cast<size_t>(a) * order + b];
  }
  Elem mul(Elem a, Elem b) const {
    return mul_tab[static_cast<size_t>(a) * order + b];
  }
  Elem neg(Elem a) const { return neg_tab[static_cast<size_t>(a)]; }
};

using RingPtr = std::shared_ptr<const FiniteRing>;

// Left ideal in canonical form: strictly increasing element indices.
struct LeftIdeal {
  std::vector<Elem> elements;
  const FiniteRing* ring = nullptr;

  bool contains(Elem x) const;
  size_t size() const { return elements.size(); }
  friend bool operator==(const LeftIdeal& a, const LeftIdeal& b) {
    return a.elements == b.elements;
  }
};

// (cardinality, lexicographic) order used everywhere ideals are listed.
bool ideal_less(const LeftIdeal& a, const LeftIdeal& b);

// a is contained in b (element sets; both must be sorted).
bool subset_of(const std::vector<Elem>& a, const std::vector<Elem>& b);

// Builds a ring from a spec.  Kinds:
//   {"kind":"zn","n":N}                integers mod N, N >= 2
//   {"kind":"gf","q":Q}                GF(Q), Q a prime power; the modulus is
//                                      the lexicographically smallest monic
//                                      irreducible polynomial over GF(p)
//   {"kind":"matrix","m":M,"q":Q}      M x M matrices over GF(Q)
//   {"kind":"chain","p":P,"e":E}       GF(P)[x]/(x^E), P a prime power
//   {"kind":"tables","add":..,"mul":..,"zero":..,"one":..}  raw tables
// Raw tables are validated exhaustively; the first violated axiom is named.
// Orders above kMaxOrder are rejected.
RingPtr build_ring(const Json& spec);

// Exhaustive axiom check; throws SpecError naming the first violated axiom.
void validate_ring(const FiniteRing& r);

// Smallest left ideal containing x, i.e. {r*x : r in R}.
LeftIdeal principal_left_ideal(const FiniteRing& r, Elem x);

// All left ideals, sorted by (cardinality, lexicographic element order).
// Enumerates principal ideals, then closes the collection under pairwise
// sums to a fixpoint.
std::vector<LeftIdeal> left_ideals(const FiniteRing& r);

// Proper left ideals not strictly contained in another proper left ideal.
std::vector<LeftIdeal> maximal_left_ideals(const FiniteRing& r);

// Intersection of all maximal left ideals.
LeftIdeal jacobson_radical(const FiniteRing& r);

// True when the left ideals are totally ordered by inclusion.
bool is_chain_ring(const FiniteRing& r);

struct ChainLevel {
  LeftIdeal ideal;
  Elem representative;  // smallest element of this ideal not in the next one
};

// Full descending chain of left ideals, R first, zero ideal last (with
// representative 0).  Throws SpecError naming two incomparable ideals when
// the ring is not a chain ring.
std::vector<ChainLevel> chain_levels(const FiniteRing& r);

// Smallest e with e*e == e and R*e == ideal, if one exists.
std::optional<Elem> idempotent_generator(const FiniteRing& r,
                                         const LeftIdeal& ideal);

// Left ideals that are also closed under right multiplication.
std::vector<LeftIdeal> two_sided_ideals(const FiniteRing& r);

// Zero radical and no proper nonzero two-sided ideal.  For finite rings this
// pins the full matrix-ring structure over a finite field.
bool is_simple_ring(const FiniteRing& r);

namespace detail {

// Arithmetic tables for GF(p^d); elements are polynomials over GF(p) encoded
// base p, least significant coefficient first.
struct GaloisTables {
  int p = 0, d = 0, q = 0;
  std::vector<Elem> add_tab, mul_tab;
  std::vector<int> modulus;  // monic irreducible, degree d, coeff of x^i at i
  Elem add(Elem a, Elem b) const {
    return add_tab[static_cast<size_t>(a) * q + b];
  }
  Elem mul(Elem a, Elem b) const {
    return mul_tab[static_cast<size_t>(a) * q + b];
  }
};

const GaloisTables& galois_tables(int q);

// Row-major base-q digit encoding for rows x cols matrices over GF(q);
// entry (i, j) is digit i*cols + j, least significant first.
std::vector<int> matrix_digits(Elem index, int rows, int cols, int q);
Elem matrix_index(const std::vector<int>& digits, int q);
Elem matrix_multiply(const GaloisTables& gf, Elem a, Elem b, int m, int inner,
                     int cols);

}  // namespace detail

}  // namespace epwb
