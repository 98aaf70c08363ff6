#pragma once

#include <functional>
#include <vector>

#include "epwb/common.hpp"

namespace epwb::detail {

// Flat view of a finite module-like table pair: `n` elements with an
// addition table and an action table for `nr` ring scalars.  Used both for
// actual modules and for codes viewed as modules of codewords.
struct TableView {
  int n = 0;
  int nr = 0;
  const Elem* add = nullptr;  // n*n
  const Elem* act = nullptr;  // nr*n
  Elem zero = 0;

  Elem add_at(Elem a, Elem b) const {
    return add[static_cast<size_t>(a) * n + b];
  }
  Elem act_at(Elem r, Elem a) const {
    return act[static_cast<size_t>(r) * n + a];
  }
};

// Greedy minimal generating sequence for a closed subset: repeatedly pick the
// smallest element outside the span of the previous picks.
std::vector<Elem> closed_subset_generators(const TableView& m,
                                           const std::vector<Elem>& subset);

struct HomSearchOptions {
  bool injective = false;
  bool first_only = false;
  // invoked for every newly determined (domain element, image) pair; return
  // false to prune the branch
  std::function<bool(Elem, Elem)> accept;
  // invoked per completed map (image per domain element, -1 outside the
  // domain subset); return false to stop the whole search
  std::function<bool(const std::vector<Elem>&)> visit;
};

// Enumerates additive, action-equivariant maps from a closed subset of `dom`
// into `tgt`, assigning generator images in ascending order and propagating
// h + r*g closures with consistency checks.  Maps are visited in
// lexicographic order of their generator image tuples.
void search_homs(const TableView& dom, const std::vector<Elem>& subset,
                 const std::vector<Elem>& gens, const TableView& tgt,
                 const HomSearchOptions& opts);

}  // namespace epwb::detail
