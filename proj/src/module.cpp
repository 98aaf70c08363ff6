#include "epwb/module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace epwb {

bool Submodule::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool submodule_less(const Submodule& a, const Submodule& b) {
  if (a.elements.size() != b.elements.size())
    return a.elements.size() < b.elements.size();
  return a.elements < b.elements;
}

std::vector<Elem> all_elements(int order) {
  std::vector<Elem> v(static_cast<size_t>(order));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

namespace {

std::string pair_str(Elem a, Elem b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string triple_str(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

int get_int(const Json& spec, const char* key) {
  if (!spec.contains(key) || !spec[key].is_number_integer())
    throw SpecError(std::string("module spec: missing or non-integer field '") +
                    key + "'");
  return spec[key].get<int>();
}

void set_spec(FiniteModule& m, Json spec) {
  m.spec = std::move(spec);
  m.spec_key = canonical_dump(
      Json{{"module", m.spec}, {"ring", m.ring->spec}});
}

void finalize_module(FiniteModule& m, Json spec) {
  validate_module(m);
  m.neg_tab.assign(static_cast<size_t>(m.order), 0);
  for (Elem a = 0; a < m.order; ++a)
    for (Elem b = 0; b < m.order; ++b)
      if (m.add(a, b) == m.zero) {
        m.neg_tab[static_cast<size_t>(a)] = b;
        break;
      }
  set_spec(m, std::move(spec));
}

FiniteModule build_regular(const RingPtr& ring) {
  FiniteModule m;
  m.ring = ring;
  m.order = ring->order;
  m.zero = ring->zero;
  m.add_tab = ring->add_tab;
  m.act_tab = ring->mul_tab;
  return m;
}

FiniteModule build_matrix_cols(const RingPtr& ring, int k) {
  if (!ring->spec.contains("kind") || ring->spec["kind"] != "matrix")
    throw SpecError("matrix-cols module requires a matrix ring");
  if (k < 1) throw SpecError("matrix-cols module requires k >= 1");
  const int mm = ring->spec["m"].get<int>();
  const int q = ring->spec["q"].get<int>();
  long long ord = 1;
  for (int i = 0; i < mm * k; ++i) {
    ord *= q;
    if (ord > kMaxOrder) throw SpecError("matrix-cols module order exceeds limit");
  }
  const detail::GaloisTables& gf = detail::galois_tables(q);
  const int n = static_cast<int>(ord);
  FiniteModule m;
  m.ring = ring;
  m.order = n;
  m.zero = 0;
  m.add_tab.assign(static_cast<size_t>(n) * n, 0);
  m.act_tab.assign(static_cast<size_t>(ring->order) * n, 0);
  for (Elem a = 0; a < n; ++a) {
    const std::vector<int> da = detail::matrix_digits(a, mm, k, q);
    for (Elem b = 0; b < n; ++b) {
      const std::vector<int> db = detail::matrix_digits(b, mm, k, q);
      std::vector<int> s(static_cast<size_t>(mm * k));
      for (int i = 0; i < mm * k; ++i)
        s[static_cast<size_t>(i)] =
            gf.add(da[static_cast<size_t>(i)], db[static_cast<size_t>(i)]);
      m.add_tab[static_cast<size_t>(a) * n + b] = detail::matrix_index(s, q);
    }
  }
  for (Elem r = 0; r < ring->order; ++r)
    for (Elem a = 0; a < n; ++a)
      m.act_tab[static_cast<size_t>(r) * n + a] =
          detail::matrix_multiply(gf, r, a, mm, mm, k);
  return m;
}

FiniteModule build_power(const RingPtr& ring, const Json& spec) {
  if (!spec.contains("base"))
    throw SpecError("module spec: power kind requires 'base'");
  const int k = get_int(spec, "n");
  if (k < 0) throw SpecError("module spec: power exponent must be >= 0");
  const ModulePtr base = build_module(ring, spec["base"]);
  long long ord = 1;
  for (int i = 0; i < k; ++i) {
    ord *= base->order;
    if (ord > kMaxOrder) throw SpecError("power module order exceeds limit");
  }
  const int n = static_cast<int>(ord);
  const int bn = base->order;
  FiniteModule m;
  m.ring = ring;
  m.order = n;
  m.zero = 0;
  m.add_tab.assign(static_cast<size_t>(n) * n, 0);
  m.act_tab.assign(static_cast<size_t>(ring->order) * n, 0);
  auto digits = [&](Elem x) {
    std::vector<int> d(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      d[static_cast<size_t>(i)] = x % bn;
      x /= bn;
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    Elem x = 0;
    for (int i = k - 1; i >= 0; --i) x = x * bn + d[static_cast<size_t>(i)];
    return x;
  };
  for (Elem a = 0; a < n; ++a) {
    const std::vector<int> da = digits(a);
    for (Elem b = 0; b < n; ++b) {
      const std::vector<int> db = digits(b);
      std::vector<int> s(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i)
        s[static_cast<size_t>(i)] = base->add(da[static_cast<size_t>(i)],
                                              db[static_cast<size_t>(i)]);
      m.add_tab[static_cast<size_t>(a) * n + b] = index(s);
    }
    for (Elem r = 0; r < ring->order; ++r) {
      std::vector<int> s(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i)
        s[static_cast<size_t>(i)] = base->act(r, da[static_cast<size_t>(i)]);
      m.act_tab[static_cast<size_t>(r) * n + a] = index(s);
    }
  }
  return m;
}

std::vector<Elem> read_module_table(const Json& j, const char* key, int rows,
                                    int cols) {
  if (!j.contains(key) || !j[key].is_array())
    throw SpecError(std::string("module spec: missing table '") + key + "'");
  const Json& data = j[key];
  if (rows >= 0 && static_cast<int>(data.size()) != rows)
    throw SpecError(std::string("module spec: table '") + key +
                    "' has wrong row count");
  std::vector<Elem> out;
  for (const Json& row : data) {
    if (!row.is_array() ||
        (cols >= 0 && static_cast<int>(row.size()) != cols))
      throw SpecError(std::string("module spec: table '") + key +
                      "' has wrong column count");
    for (const Json& v : row) {
      if (!v.is_number_integer())
        throw SpecError(std::string("module spec: table '") + key +
                        "' has a non-integer entry");
      out.push_back(v.get<int>());
    }
  }
  return out;
}

FiniteModule build_tables(const RingPtr& ring, const Json& spec) {
  FiniteModule m;
  m.ring = ring;
  if (!spec.contains("add") || !spec["add"].is_array() || spec["add"].empty())
    throw SpecError("module spec: missing or empty 'add' table");
  const int n = static_cast<int>(spec["add"].size());
  m.order = n;
  m.add_tab = read_module_table(spec, "add", n, n);
  m.act_tab = read_module_table(spec, "act", ring->order, n);
  // derive the additive identity
  m.zero = -1;
  for (Elem z = 0; z < n && m.zero < 0; ++z) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      if (m.add_tab[static_cast<size_t>(z) * n + a] != a) ok = false;
    if (ok) m.zero = z;
  }
  if (m.zero < 0) throw SpecError("no additive identity found in add table");
  return m;
}

}  // namespace

void validate_module(const FiniteModule& m) {
  const int n = m.order;
  const int nr = m.ring->order;
  if (n < 1) throw SpecError("module order must be positive");
  if (n > kMaxOrder)
    throw SpecError("module order " + std::to_string(n) + " exceeds limit " +
                    std::to_string(kMaxOrder));
  if (m.add_tab.size() != static_cast<size_t>(n) * n)
    throw SpecError("module add table must be order x order");
  if (m.act_tab.size() != static_cast<size_t>(nr) * n)
    throw SpecError("module act table must be ring-order x order");
  for (Elem v : m.add_tab)
    if (v < 0 || v >= n) throw SpecError("module add entry out of range");
  for (Elem v : m.act_tab)
    if (v < 0 || v >= n) throw SpecError("module act entry out of range");
  if (m.zero < 0 || m.zero >= n) throw SpecError("module zero out of range");

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (m.add(a, b) != m.add(b, a))
        throw SpecError("module addition is not commutative at " +
                        pair_str(a, b));
  for (Elem a = 0; a < n; ++a)
    if (m.add(m.zero, a) != a)
      throw SpecError("module zero is not an additive identity at " +
                      std::to_string(a));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c)))
          throw SpecError("module addition is not associative at " +
                          triple_str(a, b, c));
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b)
      if (m.add(a, b) == m.zero) found = true;
    if (!found)
      throw SpecError("no module additive inverse for " + std::to_string(a));
  }
  const FiniteRing& r = *m.ring;
  for (Elem s = 0; s < nr; ++s)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (m.act(s, m.add(a, b)) != m.add(m.act(s, a), m.act(s, b)))
          throw SpecError("action does not distribute over module addition at " +
                          triple_str(s, a, b));
  for (Elem s = 0; s < nr; ++s)
    for (Elem t = 0; t < nr; ++t)
      for (Elem a = 0; a < n; ++a) {
        if (m.act(r.add(s, t), a) != m.add(m.act(s, a), m.act(t, a)))
          throw SpecError("action does not distribute over ring addition at " +
                          triple_str(s, t, a));
        if (m.act(r.mul(s, t), a) != m.act(s, m.act(t, a)))
          throw SpecError("action is not associative at " + triple_str(s, t, a));
      }
  for (Elem a = 0; a < n; ++a)
    if (m.act(r.one, a) != a)
      throw SpecError("ring identity does not act as identity at " +
                      std::to_string(a));
}

ModulePtr build_module(const RingPtr& ring, const Json& spec) {
  if (!ring) throw SpecError("module spec: null ring");
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
    throw SpecError("module spec must be an object with a 'kind' string");
  const std::string kind = spec["kind"].get<std::string>();
  FiniteModule m;
  Json canon;
  if (kind == "regular") {
    m = build_regular(ring);
    canon = Json{{"kind", "regular"}};
  } else if (kind == "matrix-cols") {
    const int k = get_int(spec, "k");
    m = build_matrix_cols(ring, k);
    canon = Json{{"k", k}, {"kind", "matrix-cols"}};
  } else if (kind == "power") {
    m = build_power(ring, spec);
    canon = Json{{"base", build_module(ring, spec["base"])->spec},
                 {"kind", "power"},
                 {"n", get_int(spec, "n")}};
  } else if (kind == "tables") {
    m = build_tables(ring, spec);
    canon = Json{{"act", spec["act"]}, {"add", spec["add"]}, {"kind", "tables"}};
  } else {
    throw SpecError("unknown module kind '" + kind + "'");
  }
  finalize_module(m, std::move(canon));
  return std::make_shared<const FiniteModule>(std::move(m));
}

LeftIdeal annihilator(const FiniteModule& m, Elem x) {
  LeftIdeal out;
  out.ring = m.ring.get();
  for (Elem r = 0; r < m.ring->order; ++r)
    if (m.act(r, x) == m.zero) out.elements.push_back(r);
  return out;
}

std::vector<RhoClass> rho_classes(const FiniteModule& m) {
  std::map<std::vector<Elem>, std::vector<Elem>> by_ann;
  for (Elem a = 0; a < m.order; ++a)
    by_ann[annihilator(m, a).elements].push_back(a);
  std::vector<RhoClass> out;
  out.reserve(by_ann.size());
  for (auto& [ann, members] : by_ann)
    out.push_back(RhoClass{LeftIdeal{ann, m.ring.get()}, members});
  std::sort(out.begin(), out.end(), [](const RhoClass& a, const RhoClass& b) {
    return a.members.front() < b.members.front();
  });
  return out;
}

Submodule cyclic_submodule(const FiniteModule& m, Elem x) {
  std::vector<char> mark(static_cast<size_t>(m.order), 0);
  for (Elem r = 0; r < m.ring->order; ++r)
    mark[static_cast<size_t>(m.act(r, x))] = 1;
  Submodule s;
  for (Elem e = 0; e < m.order; ++e)
    if (mark[static_cast<size_t>(e)]) s.elements.push_back(e);
  return s;
}

namespace {

// elements of s + R*x (s closed, so the result is closed)
std::vector<Elem> extend_submodule(const FiniteModule& m,
                                   const std::vector<Elem>& s, Elem x) {
  std::vector<char> mark(static_cast<size_t>(m.order), 0);
  for (Elem a : s)
    for (Elem r = 0; r < m.ring->order; ++r)
      mark[static_cast<size_t>(m.add(a, m.act(r, x)))] = 1;
  std::vector<Elem> out;
  for (Elem e = 0; e < m.order; ++e)
    if (mark[static_cast<size_t>(e)]) out.push_back(e);
  return out;
}

}  // namespace

std::vector<Submodule> submodules(const FiniteModule& m, size_t max_count) {
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> list;
  list.push_back({m.zero});
  seen.insert(list.front());
  for (size_t i = 0; i < list.size(); ++i) {
    for (Elem x = 0; x < m.order; ++x) {
      if (std::binary_search(list[i].begin(), list[i].end(), x)) continue;
      std::vector<Elem> t = extend_submodule(m, list[i], x);
      if (seen.insert(t).second) {
        list.push_back(std::move(t));
        if (list.size() > max_count)
          throw ResourceError("submodule count exceeds bound " +
                              std::to_string(max_count));
      }
    }
  }
  std::vector<Submodule> out;
  out.reserve(list.size());
  for (auto& v : list) out.push_back(Submodule{std::move(v)});
  std::sort(out.begin(), out.end(), submodule_less);
  return out;
}

Submodule socle(const FiniteModule& m) {
  // minimal submodules are cyclic: collect cyclic submodules all of whose
  // nonzero elements regenerate them
  std::set<std::vector<Elem>> minimal;
  for (Elem a = 0; a < m.order; ++a) {
    if (a == m.zero) continue;
    const Submodule c = cyclic_submodule(m, a);
    bool is_minimal = true;
    for (Elem b : c.elements) {
      if (b == m.zero) continue;
      if (!(cyclic_submodule(m, b) == c)) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.insert(c.elements);
  }
  std::vector<Elem> soc{m.zero};
  for (const auto& mn : minimal) {
    std::vector<char> mark(static_cast<size_t>(m.order), 0);
    for (Elem a : soc)
      for (Elem b : mn) mark[static_cast<size_t>(m.add(a, b))] = 1;
    std::vector<Elem> next;
    for (Elem e = 0; e < m.order; ++e)
      if (mark[static_cast<size_t>(e)]) next.push_back(e);
    soc = std::move(next);
  }
  return Submodule{std::move(soc)};
}

bool is_cyclic(const FiniteModule& m, const Submodule& s) {
  if (s.elements == std::vector<Elem>{m.zero}) return true;
  for (Elem a : s.elements)
    if (cyclic_submodule(m, a) == s) return true;
  return false;
}

std::vector<std::vector<int>> character_value_arrays(const RingPtr& ring) {
  const FiniteRing& r = *ring;
  const int n = r.order;
  // additive orders and exponent
  std::vector<int> ord(static_cast<size_t>(n), 1);
  int e = 1;
  for (Elem a = 0; a < n; ++a) {
    Elem acc = a;
    int k = 1;
    while (acc != r.zero) {
      acc = r.add(acc, a);
      ++k;
    }
    ord[static_cast<size_t>(a)] = k;
    e = std::lcm(e, k);
  }
  // greedy generating sequence of (R,+), with the coset decomposition of each
  // extension step precomputed
  std::vector<char> in_h(static_cast<size_t>(n), 0);
  in_h[static_cast<size_t>(r.zero)] = 1;
  std::vector<Elem> h_list{r.zero};
  struct Step {
    Elem gen;
    int m;                    // least j >= 1 with j*gen in the previous span
    Elem anchor;              // m*gen
    std::vector<std::array<Elem, 3>> assigns;  // (element, base, j)
  };
  std::vector<Step> steps;
  while (static_cast<int>(h_list.size()) < n) {
    Elem g = -1;
    for (Elem a = 0; a < n; ++a)
      if (!in_h[static_cast<size_t>(a)]) {
        g = a;
        break;
      }
    Step st;
    st.gen = g;
    Elem acc = g;
    int j = 1;
    while (!in_h[static_cast<size_t>(acc)]) {
      acc = r.add(acc, g);
      ++j;
    }
    st.m = j;
    st.anchor = acc;
    const std::vector<Elem> prev = h_list;
    Elem jg = g;
    for (int jj = 1; jj < st.m; ++jj) {
      for (Elem h : prev) {
        const Elem el = r.add(h, jg);
        st.assigns.push_back({el, h, jj});
        in_h[static_cast<size_t>(el)] = 1;
        h_list.push_back(el);
      }
      jg = r.add(jg, g);
    }
    steps.push_back(std::move(st));
  }
  // enumerate all homomorphisms into Z/e by generator-value assignment
  std::vector<std::vector<int>> values;
  std::vector<int> chi(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, size_t si) -> void {
    if (si == steps.size()) {
      values.push_back(chi);
      return;
    }
    const Step& st = steps[si];
    const int c = chi[static_cast<size_t>(st.anchor)];
    for (int v = 0; v < e; ++v) {
      if ((st.m * v) % e != c) continue;
      for (const auto& as : st.assigns)
        chi[static_cast<size_t>(as[0])] =
            (chi[static_cast<size_t>(as[1])] + as[2] * v) % e;
      self(self, si + 1);
    }
  };
  rec(rec, 0);
  if (static_cast<int>(values.size()) != n)
    throw InternalInconsistency(
        "character module size " + std::to_string(values.size()) +
        " differs from ring order " + std::to_string(n));
  std::sort(values.begin(), values.end());
  return values;
}

ModulePtr character_module(const RingPtr& ring) {
  const FiniteRing& r = *ring;
  const int n = r.order;
  const std::vector<std::vector<int>> values = character_value_arrays(ring);
  int e = 1;
  for (Elem a = 0; a < n; ++a) {
    Elem acc = a;
    int k = 1;
    while (acc != r.zero) {
      acc = r.add(acc, a);
      ++k;
    }
    e = std::lcm(e, k);
  }
  std::map<std::vector<int>, Elem> index;
  for (size_t i = 0; i < values.size(); ++i)
    index[values[i]] = static_cast<Elem>(i);
  FiniteModule m;
  m.ring = ring;
  m.order = n;
  m.zero = 0;
  m.add_tab.assign(static_cast<size_t>(n) * n, 0);
  m.act_tab.assign(static_cast<size_t>(n) * n, 0);
  std::vector<int> tmp(static_cast<size_t>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (int s = 0; s < n; ++s)
        tmp[static_cast<size_t>(s)] =
            (values[static_cast<size_t>(a)][static_cast<size_t>(s)] +
             values[static_cast<size_t>(b)][static_cast<size_t>(s)]) %
            e;
      auto it = index.find(tmp);
      if (it == index.end())
        throw InternalInconsistency("character sum left the module");
      m.add_tab[static_cast<size_t>(a) * n + b] = it->second;
    }
    for (Elem s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t)
        tmp[static_cast<size_t>(t)] =
            values[static_cast<size_t>(a)][static_cast<size_t>(r.mul(t, s))];
      auto it = index.find(tmp);
      if (it == index.end())
        throw InternalInconsistency("character action left the module");
      m.act_tab[static_cast<size_t>(s) * n + a] = it->second;
    }
  }
  finalize_module(m, Json{{"kind", "character"}});
  return std::make_shared<const FiniteModule>(std::move(m));
}

std::optional<ModuleMap> embeds_in(const ModulePtr& a, const ModulePtr& b) {
  if (a->ring->spec_key != b->ring->spec_key)
    throw SpecError("embeds_in requires modules over the same ring");
  if (a->order > b->order) return std::nullopt;
  const detail::TableView va = a->view(), vb = b->view();
  const std::vector<Elem> gens =
      detail::closed_subset_generators(va, all_elements(a->order));
  std::optional<ModuleMap> out;
  detail::HomSearchOptions opts;
  opts.injective = true;
  opts.first_only = true;
  opts.visit = [&](const std::vector<Elem>& images) {
    out = ModuleMap{a, b, images};
    return false;
  };
  detail::search_homs(va, all_elements(a->order), gens, vb, opts);
  return out;
}

std::vector<std::vector<Elem>> automorphism_images(const FiniteModule& a) {
  const detail::TableView v = a.view();
  const std::vector<Elem> gens =
      detail::closed_subset_generators(v, all_elements(a.order));
  std::vector<std::vector<Elem>> out;
  detail::HomSearchOptions opts;
  opts.injective = true;
  opts.visit = [&](const std::vector<Elem>& images) {
    out.push_back(images);
    return true;
  };
  detail::search_homs(v, all_elements(a.order), gens, v, opts);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_automorphism(const FiniteModule& a, const std::vector<Elem>& images) {
  if (images.size() != static_cast<size_t>(a.order)) return false;
  std::vector<char> hit(static_cast<size_t>(a.order), 0);
  for (Elem v : images) {
    if (v < 0 || v >= a.order || hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = 1;
  }
  for (Elem x = 0; x < a.order; ++x)
    for (Elem y = 0; y < a.order; ++y)
      if (images[static_cast<size_t>(a.add(x, y))] !=
          a.add(images[static_cast<size_t>(x)], images[static_cast<size_t>(y)]))
        return false;
  for (Elem r = 0; r < a.ring->order; ++r)
    for (Elem x = 0; x < a.order; ++x)
      if (images[static_cast<size_t>(a.act(r, x))] !=
          a.act(r, images[static_cast<size_t>(x)]))
        return false;
  return true;
}

PseudoInjectivity is_pseudo_injective(const FiniteModule& a) {
  const std::vector<std::vector<Elem>> auts = automorphism_images(a);
  const detail::TableView v = a.view();
  PseudoInjectivity result;
  for (const Submodule& b : submodules(a)) {
    const std::vector<Elem> gens = detail::closed_subset_generators(v, b.elements);
    bool failed = false;
    detail::HomSearchOptions opts;
    opts.injective = true;
    opts.visit = [&](const std::vector<Elem>& images) {
      for (const auto& aut : auts) {
        bool extends = true;
        for (Elem x : b.elements)
          if (aut[static_cast<size_t>(x)] != images[static_cast<size_t>(x)]) {
            extends = false;
            break;
          }
        if (extends) return true;  // keep scanning maps
      }
      result.pseudo_injective = false;
      result.witness_domain = b;
      result.witness_images.clear();
      for (Elem x : b.elements)
        result.witness_images.push_back(images[static_cast<size_t>(x)]);
      failed = true;
      return false;
    };
    detail::search_homs(v, b.elements, gens, v, opts);
    if (failed) break;
  }
  return result;
}

}  // namespace epwb
