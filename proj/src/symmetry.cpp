#include "epwb/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "epwb/common.hpp"

namespace epwb {

namespace {

std::vector<Elem> invert_images(const std::vector<Elem>& images) {
  std::vector<Elem> inv(images.size(), -1);
  for (size_t a = 0; a < images.size(); ++a)
    inv[static_cast<size_t>(images[a])] = static_cast<Elem>(a);
  return inv;
}

// Builds the group structure from a closed, duplicate-free list of
// automorphism image arrays.
SymmetryGroup finish_group(const ModulePtr& a,
                           std::vector<std::vector<Elem>> images) {
  std::sort(images.begin(), images.end());
  SymmetryGroup g;
  g.module = a;
  std::map<std::vector<Elem>, int> index;
  for (size_t i = 0; i < images.size(); ++i)
    index[images[i]] = static_cast<int>(i);
  for (auto& im : images) {
    Automorphism f;
    f.inverse = invert_images(im);
    f.images = std::move(im);
    g.elements.push_back(std::move(f));
  }
  const size_t k = g.elements.size();
  std::vector<Elem> id(static_cast<size_t>(a->order));
  for (size_t x = 0; x < id.size(); ++x) id[x] = static_cast<Elem>(x);
  auto it = index.find(id);
  if (it == index.end())
    throw InternalInconsistency("symmetry group is missing the identity map");
  g.identity = it->second;

  g.comp_tab.assign(k * k, -1);
  g.inv_tab.assign(k, -1);
  std::vector<Elem> buf(static_cast<size_t>(a->order));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      const auto& fi = g.elements[i].images;
      const auto& fj = g.elements[j].images;
      for (size_t x = 0; x < buf.size(); ++x)
        buf[x] = fj[static_cast<size_t>(fi[x])];
      auto pos = index.find(buf);
      if (pos == index.end())
        throw InternalInconsistency("symmetry group is not closed under composition");
      g.comp_tab[i * k + j] = pos->second;
      if (pos->second == g.identity) g.inv_tab[i] = static_cast<int>(j);
    }
  }
  for (size_t i = 0; i < k; ++i)
    if (g.inv_tab[i] < 0)
      throw InternalInconsistency("symmetry group element has no inverse");
  return g;
}

}  // namespace

int SymmetryGroup::find(const std::vector<Elem>& images) const {
  auto cmp = [](const Automorphism& f, const std::vector<Elem>& v) {
    return f.images < v;
  };
  auto it = std::lower_bound(elements.begin(), elements.end(), images, cmp);
  if (it == elements.end() || it->images != images) return -1;
  return static_cast<int>(it - elements.begin());
}

SymmetryGroup aut_group(const ModulePtr& a) {
  return finish_group(a, automorphism_images(*a));
}

SymmetryGroup subgroup_closure(const ModulePtr& a,
                               const std::vector<std::vector<Elem>>& gens) {
  for (const auto& im : gens)
    if (!is_automorphism(*a, im))
      throw SpecError("group generator is not a module automorphism");

  std::vector<Elem> id(static_cast<size_t>(a->order));
  for (size_t x = 0; x < id.size(); ++x) id[x] = static_cast<Elem>(x);

  std::set<std::vector<Elem>> closed;
  closed.insert(id);
  std::vector<std::vector<Elem>> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& f : frontier) {
      for (const auto& g : gens) {
        std::vector<Elem> h(f.size());
        for (size_t x = 0; x < f.size(); ++x)
          h[x] = g[static_cast<size_t>(f[x])];
        if (closed.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return finish_group(a, {closed.begin(), closed.end()});
}

SymmetryGroup group_from_images(const ModulePtr& a,
                                std::vector<std::vector<Elem>> images) {
  std::set<std::vector<Elem>> dedup;
  for (auto& im : images) {
    if (!is_automorphism(*a, im))
      throw SpecError("group element is not a module automorphism");
    dedup.insert(std::move(im));
  }
  return finish_group(a, {dedup.begin(), dedup.end()});
}

OrbitIndex orbits(const FiniteModule& a, const SymmetryGroup& g) {
  OrbitIndex idx;
  idx.orbit_of.assign(static_cast<size_t>(a.order), -1);
  for (Elem start = 0; start < a.order; ++start) {
    if (idx.orbit_of[static_cast<size_t>(start)] >= 0) continue;
    const int id = idx.orbit_count++;
    idx.representative.push_back(start);
    std::vector<Elem> stack{start};
    idx.orbit_of[static_cast<size_t>(start)] = id;
    while (!stack.empty()) {
      Elem x = stack.back();
      stack.pop_back();
      for (const auto& f : g.elements) {
        Elem y = f.images[static_cast<size_t>(x)];
        if (idx.orbit_of[static_cast<size_t>(y)] < 0) {
          idx.orbit_of[static_cast<size_t>(y)] = id;
          stack.push_back(y);
        }
      }
    }
  }
  return idx;
}

Word apply_monomial(const SymmetryGroup& g, const MonomialTransformation& t,
                    const Word& x) {
  if (static_cast<int>(x.size()) != t.n ||
      static_cast<int>(t.sigma.size()) != t.n ||
      static_cast<int>(t.taus.size()) != t.n)
    throw SpecError("monomial transformation length mismatch");
  Word y(x.size());
  for (int i = 0; i < t.n; ++i)
    y[static_cast<size_t>(i)] =
        g.apply(t.taus[static_cast<size_t>(i)],
                x[static_cast<size_t>(t.sigma[static_cast<size_t>(i)])]);
  return y;
}

MonomialTransformation compose_monomial(const SymmetryGroup& g,
                                        const MonomialTransformation& first,
                                        const MonomialTransformation& second) {
  if (first.n != second.n)
    throw SpecError("monomial transformation length mismatch");
  MonomialTransformation t;
  t.n = first.n;
  t.sigma.resize(static_cast<size_t>(t.n));
  t.taus.resize(static_cast<size_t>(t.n));
  for (int i = 0; i < t.n; ++i) {
    const int k = second.sigma[static_cast<size_t>(i)];
    t.sigma[static_cast<size_t>(i)] = first.sigma[static_cast<size_t>(k)];
    t.taus[static_cast<size_t>(i)] =
        g.compose(first.taus[static_cast<size_t>(k)],
                  second.taus[static_cast<size_t>(i)]);
  }
  return t;
}

MonomialTransformation inverse_monomial(const SymmetryGroup& g,
                                        const MonomialTransformation& t) {
  MonomialTransformation r;
  r.n = t.n;
  r.sigma.resize(static_cast<size_t>(t.n));
  r.taus.resize(static_cast<size_t>(t.n));
  for (int i = 0; i < t.n; ++i)
    r.sigma[static_cast<size_t>(t.sigma[static_cast<size_t>(i)])] = i;
  for (int j = 0; j < t.n; ++j)
    r.taus[static_cast<size_t>(j)] =
        g.inverse(t.taus[static_cast<size_t>(r.sigma[static_cast<size_t>(j)])]);
  return r;
}

MonomialTransformation random_monomial(const SymmetryGroup& g, int n,
                                       std::mt19937_64& rng) {
  MonomialTransformation t;
  t.n = n;
  t.sigma.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) t.sigma[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const size_t j = static_cast<size_t>(rng() % static_cast<uint64_t>(i + 1));
    std::swap(t.sigma[static_cast<size_t>(i)], t.sigma[j]);
  }
  t.taus.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    t.taus[static_cast<size_t>(i)] =
        static_cast<int>(rng() % static_cast<uint64_t>(g.size()));
  return t;
}

Word random_word(const FiniteModule& a, int n, std::mt19937_64& rng) {
  Word w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    w[static_cast<size_t>(i)] =
        static_cast<Elem>(rng() % static_cast<uint64_t>(a.order));
  return w;
}

PartitionComparison compare_orbit_rho_partitions(const ModulePtr& a) {
  PartitionComparison out;
  out.pseudo_injective = is_pseudo_injective(*a).pseudo_injective;

  for (const auto& cls : rho_classes(*a)) out.rho_partition.push_back(cls.members);

  SymmetryGroup g = aut_group(a);
  OrbitIndex idx = orbits(*a, g);
  out.orbit_partition.assign(static_cast<size_t>(idx.orbit_count), {});
  for (Elem x = 0; x < a->order; ++x)
    out.orbit_partition[static_cast<size_t>(idx.orbit_of[static_cast<size_t>(x)])]
        .push_back(x);

  out.partitions_equal = out.orbit_partition == out.rho_partition;

  // Each orbit must land inside a single equal-annihilator class: applying an
  // automorphism never changes the annihilator.
  std::vector<int> rho_of(static_cast<size_t>(a->order), -1);
  for (size_t c = 0; c < out.rho_partition.size(); ++c)
    for (Elem x : out.rho_partition[c]) rho_of[static_cast<size_t>(x)] = static_cast<int>(c);
  out.orbits_refine_rho = true;
  for (const auto& orbit : out.orbit_partition) {
    for (Elem x : orbit)
      if (rho_of[static_cast<size_t>(x)] != rho_of[static_cast<size_t>(orbit[0])])
        out.orbits_refine_rho = false;
  }
  return out;
}

}  // namespace epwb
