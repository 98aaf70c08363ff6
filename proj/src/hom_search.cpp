#include "epwb/detail/hom_search.hpp"

#include <algorithm>

namespace epwb::detail {

std::vector<Elem> closed_subset_generators(const TableView& m,
                                           const std::vector<Elem>& subset) {
  std::vector<char> want(static_cast<size_t>(m.n), 0);
  for (Elem e : subset) want[static_cast<size_t>(e)] = 1;
  std::vector<char> span(static_cast<size_t>(m.n), 0);
  span[static_cast<size_t>(m.zero)] = 1;
  std::vector<Elem> span_list{m.zero};
  std::vector<Elem> gens;
  size_t covered = 1;
  while (covered < subset.size()) {
    Elem g = -1;
    for (Elem e : subset)
      if (!span[static_cast<size_t>(e)]) {
        g = e;
        break;
      }
    gens.push_back(g);
    // span := span + R*g
    std::vector<Elem> next_list = span_list;
    for (size_t k = 0; k < span_list.size(); ++k)
      for (Elem r = 0; r < m.nr; ++r) {
        const Elem e = m.add_at(span_list[k], m.act_at(r, g));
        if (!span[static_cast<size_t>(e)]) {
          span[static_cast<size_t>(e)] = 1;
          next_list.push_back(e);
        }
      }
    covered = next_list.size();
    span_list = std::move(next_list);
  }
  return gens;
}

namespace {

struct Search {
  const TableView& dom;
  const TableView& tgt;
  const std::vector<Elem>& gens;
  const HomSearchOptions& opts;

  std::vector<Elem> images;
  std::vector<Elem> defined;     // assignment-ordered domain elements
  std::vector<int> used;         // target preimage counts (injective mode)
  bool stopped = false;

  // Defines images on the span of the previously defined set and r*g, given
  // the candidate image t of g.  Returns the undo point, or -1 on conflict.
  int extend(Elem g, Elem t) {
    const int start = static_cast<int>(defined.size());
    for (int k = 0; k < start; ++k) {
      const Elem h = defined[static_cast<size_t>(k)];
      const Elem fh = images[static_cast<size_t>(h)];
      for (Elem r = 0; r < dom.nr; ++r) {
        const Elem e = dom.add_at(h, dom.act_at(r, g));
        const Elem v = tgt.add_at(fh, tgt.act_at(r, t));
        const Elem cur = images[static_cast<size_t>(e)];
        if (cur == v) continue;
        if (cur != -1) {
          undo(start);
          return -1;
        }
        if (opts.injective && used[static_cast<size_t>(v)] != 0) {
          undo(start);
          return -1;
        }
        if (opts.accept && !opts.accept(e, v)) {
          undo(start);
          return -1;
        }
        images[static_cast<size_t>(e)] = v;
        ++used[static_cast<size_t>(v)];
        defined.push_back(e);
      }
    }
    return start;
  }

  void undo(int start) {
    while (static_cast<int>(defined.size()) > start) {
      const Elem e = defined.back();
      defined.pop_back();
      --used[static_cast<size_t>(images[static_cast<size_t>(e)])];
      images[static_cast<size_t>(e)] = -1;
    }
  }

  void run(size_t gi) {
    if (stopped) return;
    if (gi == gens.size()) {
      if (!opts.visit(images) || opts.first_only) stopped = true;
      return;
    }
    const Elem g = gens[gi];
    for (Elem t = 0; t < tgt.n && !stopped; ++t) {
      const int start = extend(g, t);
      if (start < 0) continue;
      run(gi + 1);
      undo(start);
    }
  }
};

}  // namespace

void search_homs(const TableView& dom, const std::vector<Elem>& subset,
                 const std::vector<Elem>& gens, const TableView& tgt,
                 const HomSearchOptions& opts) {
  (void)subset;
  Search s{dom, tgt, gens, opts,
           std::vector<Elem>(static_cast<size_t>(dom.n), -1),
           {},
           std::vector<int>(static_cast<size_t>(tgt.n), 0),
           false};
  s.images[static_cast<size_t>(dom.zero)] = tgt.zero;
  ++s.used[static_cast<size_t>(tgt.zero)];
  s.defined.push_back(dom.zero);
  if (opts.accept && !opts.accept(dom.zero, tgt.zero)) return;
  s.run(0);
}

}  // namespace epwb::detail
