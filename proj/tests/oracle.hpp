// Independent brute-force reference implementations used to cross-check the
// library.  Everything here enumerates raw subsets or raw maps with no reuse
// of the library's search machinery, so agreement is meaningful.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "epwb/module.hpp"
#include "epwb/ring.hpp"
#include "epwb/symmetry.hpp"

namespace oracle {

using epwb::Elem;
using epwb::FiniteModule;
using epwb::FiniteRing;
using epwb::Json;
using epwb::Word;

// All additive subgroups of the ring closed under left multiplication, found
// by testing every subset containing 0.  Usable up to order 16 or so.
inline std::vector<std::vector<Elem>> brute_left_ideals(const FiniteRing& r) {
  const int n = r.order;
  std::vector<std::vector<Elem>> out;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & (1u << r.zero))) continue;
    std::vector<Elem> elems;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) elems.push_back(x);
    bool ok = true;
    for (Elem x : elems) {
      for (Elem y : elems)
        if (!(mask & (1u << r.add(x, y)))) ok = false;
      for (Elem s = 0; s < n && ok; ++s)
        if (!(mask & (1u << r.mul(s, x)))) ok = false;
      if (!ok) break;
    }
    if (ok) out.push_back(elems);
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<Elem>& a, const std::vector<Elem>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

// Same subset filter for submodules of a module of order <= 16.
inline std::vector<std::vector<Elem>> brute_submodules(const FiniteModule& a) {
  const int n = a.order;
  std::vector<std::vector<Elem>> out;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & (1u << a.zero))) continue;
    std::vector<Elem> elems;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) elems.push_back(x);
    bool ok = true;
    for (Elem x : elems) {
      for (Elem y : elems)
        if (!(mask & (1u << a.add(x, y)))) ok = false;
      for (Elem s = 0; s < a.ring->order && ok; ++s)
        if (!(mask & (1u << a.act(s, x)))) ok = false;
      if (!ok) break;
    }
    if (ok) out.push_back(elems);
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<Elem>& a_, const std::vector<Elem>& b_) {
              if (a_.size() != b_.size()) return a_.size() < b_.size();
              return a_ < b_;
            });
  return out;
}

inline bool is_additive_equivariant(const FiniteModule& a,
                                    const std::vector<Elem>& f) {
  for (Elem x = 0; x < a.order; ++x) {
    for (Elem y = 0; y < a.order; ++y)
      if (f[static_cast<size_t>(a.add(x, y))] !=
          a.add(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
        return false;
    for (Elem s = 0; s < a.ring->order; ++s)
      if (f[static_cast<size_t>(a.act(s, x))] !=
          a.act(s, f[static_cast<size_t>(x)]))
        return false;
  }
  return true;
}

// All module automorphisms by enumerating every one of the order^order maps.
// Only sensible for order <= 5 or so.
inline std::vector<std::vector<Elem>> brute_automorphisms(const FiniteModule& a) {
  const int n = a.order;
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> f(static_cast<size_t>(n), 0);
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<uint64_t>(n);
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      f[static_cast<size_t>(i)] = static_cast<Elem>(c % n);
      c /= static_cast<uint64_t>(n);
    }
    std::vector<bool> hit(static_cast<size_t>(n), false);
    bool bij = true;
    for (Elem v : f) {
      if (hit[static_cast<size_t>(v)]) bij = false;
      hit[static_cast<size_t>(v)] = true;
    }
    if (bij && is_additive_equivariant(a, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every monomial transformation for length n over the group, in no
// particular order, applied-and-compared against a wordwise map.
inline bool brute_monomial_exists(const epwb::SymmetryGroup& g, int n,
                                  const std::vector<Word>& src,
                                  const std::vector<Word>& img) {
  std::vector<int> sigma(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<size_t>(i)] = i;
  std::sort(sigma.begin(), sigma.end());
  do {
    std::vector<int> taus(static_cast<size_t>(n), 0);
    for (;;) {
      bool all = true;
      for (size_t k = 0; k < src.size() && all; ++k) {
        for (int i = 0; i < n && all; ++i) {
          Elem got = g.apply(
              taus[static_cast<size_t>(i)],
              src[k][static_cast<size_t>(sigma[static_cast<size_t>(i)])]);
          if (got != img[k][static_cast<size_t>(i)]) all = false;
        }
      }
      if (all) return true;
      int i = n - 1;
      while (i >= 0) {
        if (++taus[static_cast<size_t>(i)] < g.size()) break;
        taus[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

// Direct product Z/2 x Z/8 as a left Z/8-module given by raw tables;
// element (a, b) is encoded as a*8 + b.
inline Json z2xz8_module_spec() {
  const int n = 16;
  auto enc = [](int a, int b) { return a * 8 + b; };
  std::vector<std::vector<int>> add(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n)));
  std::vector<std::vector<int>> act(8, std::vector<int>(static_cast<size_t>(n)));
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 8; ++b1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 8; ++b2)
          add[static_cast<size_t>(enc(a1, b1))][static_cast<size_t>(enc(a2, b2))] =
              enc((a1 + a2) % 2, (b1 + b2) % 8);
  for (int r = 0; r < 8; ++r)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 8; ++b)
        act[static_cast<size_t>(r)][static_cast<size_t>(enc(a, b))] =
            enc((r * a) % 2, (r * b) % 8);
  return Json{{"kind", "tables"}, {"add", add}, {"act", act}};
}

}  // namespace oracle
