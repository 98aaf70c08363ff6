#include "epwb/ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace epwb {

std::string canonical_dump(const Json& j) { return j.dump(); }

bool LeftIdeal::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool ideal_less(const LeftIdeal& a, const LeftIdeal& b) {
  if (a.elements.size() != b.elements.size())
    return a.elements.size() < b.elements.size();
  return a.elements < b.elements;
}

bool subset_of(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

int get_int(const Json& spec, const char* key) {
  if (!spec.contains(key) || !spec[key].is_number_integer())
    throw SpecError(std::string("ring spec: missing or non-integer field '") +
                    key + "'");
  return spec[key].get<int>();
}

std::string pair_str(Elem a, Elem b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string triple_str(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

// ---- polynomial helpers over F_p (coefficients ascending) ----

int poly_deg(const std::vector<int>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

// remainder of f modulo monic g
std::vector<int> poly_rem(std::vector<int> f, const std::vector<int>& g,
                          int p) {
  const int dg = poly_deg(g);
  for (int df = poly_deg(f); df >= dg && dg >= 0; df = poly_deg(f)) {
    const int lead = f[static_cast<size_t>(df)];
    for (int i = 0; i <= dg; ++i) {
      int t = f[static_cast<size_t>(df - dg + i)] -
              lead * g[static_cast<size_t>(i)];
      t %= p;
      if (t < 0) t += p;
      f[static_cast<size_t>(df - dg + i)] = t;
    }
  }
  return f;
}

bool poly_irreducible(const std::vector<int>& f, int p, int d) {
  if (d == 1) return true;
  for (int k = 1; 2 * k <= d; ++k) {
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      std::vector<int> g(static_cast<size_t>(k) + 1, 0);
      g[static_cast<size_t>(k)] = 1;
      int t = c;
      for (int i = 0; i < k; ++i) {
        g[static_cast<size_t>(i)] = t % p;
        t /= p;
      }
      if (poly_deg(poly_rem(f, g, p)) < 0) return false;
    }
  }
  return true;
}

std::vector<int> digits_of(Elem index, int base, int count) {
  std::vector<int> d(static_cast<size_t>(count));
  int t = index;
  for (int i = 0; i < count; ++i) {
    d[static_cast<size_t>(i)] = t % base;
    t /= base;
  }
  return d;
}

Elem index_of(const std::vector<int>& digits, int base) {
  Elem idx = 0;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i)
    idx = idx * base + digits[static_cast<size_t>(i)];
  return idx;
}

}  // namespace

namespace detail {

const GaloisTables& galois_tables(int q) {
  static std::mutex mu;
  static std::map<int, GaloisTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;

  auto [p, d] = prime_power_decompose(q);
  GaloisTables t;
  t.p = p;
  t.d = d;
  t.q = q;

  // lexicographically smallest monic irreducible modulus, compared as the
  // base-p value of its coefficient vector
  int lower_count = 1;
  for (int i = 0; i < d; ++i) lower_count *= p;
  for (int c = 0; c < lower_count; ++c) {
    std::vector<int> f = digits_of(c, p, d);
    f.push_back(1);
    if (poly_irreducible(f, p, d)) {
      t.modulus = f;
      break;
    }
  }
  if (t.modulus.empty())
    throw InternalInconsistency("no irreducible polynomial found for GF(" +
                                std::to_string(q) + ")");

  t.add_tab.assign(static_cast<size_t>(q) * q, 0);
  t.mul_tab.assign(static_cast<size_t>(q) * q, 0);
  for (Elem a = 0; a < q; ++a) {
    const std::vector<int> da = digits_of(a, p, d);
    for (Elem b = 0; b < q; ++b) {
      const std::vector<int> db = digits_of(b, p, d);
      std::vector<int> s(static_cast<size_t>(d));
      for (int i = 0; i < d; ++i)
        s[static_cast<size_t>(i)] =
            (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p;
      t.add_tab[static_cast<size_t>(a) * q + b] = index_of(s, p);

      std::vector<int> prod(static_cast<size_t>(2 * d - 1), 0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          prod[static_cast<size_t>(i + j)] =
              (prod[static_cast<size_t>(i + j)] +
               da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) %
              p;
      std::vector<int> r = poly_rem(std::move(prod), t.modulus, p);
      r.resize(static_cast<size_t>(d), 0);
      t.mul_tab[static_cast<size_t>(a) * q + b] = index_of(r, p);
    }
  }
  return cache.emplace(q, std::move(t)).first->second;
}

std::vector<int> matrix_digits(Elem index, int rows, int cols, int q) {
  return digits_of(index, q, rows * cols);
}

Elem matrix_index(const std::vector<int>& digits, int q) {
  return index_of(digits, q);
}

Elem matrix_multiply(const GaloisTables& gf, Elem a, Elem b, int m, int inner,
                     int cols) {
  const std::vector<int> da = matrix_digits(a, m, inner, gf.q);
  const std::vector<int> db = matrix_digits(b, inner, cols, gf.q);
  std::vector<int> out(static_cast<size_t>(m * cols), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < cols; ++j) {
      Elem acc = 0;
      for (int k = 0; k < inner; ++k)
        acc = gf.add(acc, gf.mul(da[static_cast<size_t>(i * inner + k)],
                                 db[static_cast<size_t>(k * cols + j)]));
      out[static_cast<size_t>(i * cols + j)] = acc;
    }
  return matrix_index(out, gf.q);
}

}  // namespace detail

void validate_ring(const FiniteRing& r) {
  const int n = r.order;
  if (n < 1) throw SpecError("ring order must be positive");
  if (n > kMaxOrder)
    throw SpecError("ring order " + std::to_string(n) + " exceeds limit " +
                    std::to_string(kMaxOrder));
  if (r.add_tab.size() != static_cast<size_t>(n) * n ||
      r.mul_tab.size() != static_cast<size_t>(n) * n)
    throw SpecError("ring tables must be order x order");
  for (Elem v : r.add_tab)
    if (v < 0 || v >= n) throw SpecError("add table entry out of range");
  for (Elem v : r.mul_tab)
    if (v < 0 || v >= n) throw SpecError("mul table entry out of range");
  if (r.zero < 0 || r.zero >= n || r.one < 0 || r.one >= n)
    throw SpecError("zero/one out of range");

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (r.add(a, b) != r.add(b, a))
        throw SpecError("addition is not commutative at " + pair_str(a, b));
  for (Elem a = 0; a < n; ++a)
    if (r.add(r.zero, a) != a)
      throw SpecError("zero is not an additive identity at " +
                      std::to_string(a));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
          throw SpecError("addition is not associative at " +
                          triple_str(a, b, c));
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b)
      if (r.add(a, b) == r.zero) found = true;
    if (!found)
      throw SpecError("no additive inverse for " + std::to_string(a));
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          throw SpecError("multiplication is not associative at " +
                          triple_str(a, b, c));
  for (Elem a = 0; a < n; ++a) {
    if (r.mul(r.one, a) != a)
      throw SpecError("one is not a left identity at " + std::to_string(a));
    if (r.mul(a, r.one) != a)
      throw SpecError("one is not a right identity at " + std::to_string(a));
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          throw SpecError("left distributivity fails at " + triple_str(a, b, c));
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
          throw SpecError("right distributivity fails at " +
                          triple_str(a, b, c));
      }
}

namespace {

void finalize_ring(FiniteRing& r, Json spec) {
  validate_ring(r);
  r.neg_tab.assign(static_cast<size_t>(r.order), 0);
  for (Elem a = 0; a < r.order; ++a)
    for (Elem b = 0; b < r.order; ++b)
      if (r.add(a, b) == r.zero) {
        r.neg_tab[static_cast<size_t>(a)] = b;
        break;
      }
  r.spec = std::move(spec);
  r.spec_key = canonical_dump(r.spec);
}

FiniteRing build_zn(int n) {
  if (n < 2) throw SpecError("zn ring requires n >= 2");
  if (n > kMaxOrder) throw SpecError("zn ring order exceeds limit");
  FiniteRing r;
  r.order = n;
  r.zero = 0;
  r.one = 1;
  r.add_tab.assign(static_cast<size_t>(n) * n, 0);
  r.mul_tab.assign(static_cast<size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      r.add_tab[static_cast<size_t>(a) * n + b] = (a + b) % n;
      r.mul_tab[static_cast<size_t>(a) * n + b] = (a * b) % n;
    }
  return r;
}

FiniteRing build_gf(int q) {
  if (q > kMaxOrder) throw SpecError("gf ring order exceeds limit");
  const detail::GaloisTables& gf = detail::galois_tables(q);
  FiniteRing r;
  r.order = q;
  r.zero = 0;
  r.one = 1;
  r.add_tab = gf.add_tab;
  r.mul_tab = gf.mul_tab;
  return r;
}

FiniteRing build_matrix(int m, int q) {
  if (m < 1) throw SpecError("matrix ring requires m >= 1");
  long long ord = 1;
  for (int i = 0; i < m * m; ++i) {
    ord *= q;
    if (ord > kMaxOrder)
      throw SpecError("matrix ring order exceeds limit " +
                      std::to_string(kMaxOrder));
  }
  const detail::GaloisTables& gf = detail::galois_tables(q);
  const int n = static_cast<int>(ord);
  FiniteRing r;
  r.order = n;
  r.zero = 0;
  r.add_tab.assign(static_cast<size_t>(n) * n, 0);
  r.mul_tab.assign(static_cast<size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a) {
    const std::vector<int> da = detail::matrix_digits(a, m, m, q);
    for (Elem b = 0; b < n; ++b) {
      const std::vector<int> db = detail::matrix_digits(b, m, m, q);
      std::vector<int> s(static_cast<size_t>(m * m));
      for (int i = 0; i < m * m; ++i)
        s[static_cast<size_t>(i)] = gf.add(da[static_cast<size_t>(i)],
                                           db[static_cast<size_t>(i)]);
      r.add_tab[static_cast<size_t>(a) * n + b] = detail::matrix_index(s, q);
      r.mul_tab[static_cast<size_t>(a) * n + b] =
          detail::matrix_multiply(gf, a, b, m, m, m);
    }
  }
  std::vector<int> id(static_cast<size_t>(m * m), 0);
  for (int i = 0; i < m; ++i) id[static_cast<size_t>(i * m + i)] = 1;
  r.one = detail::matrix_index(id, q);
  return r;
}

// GF(p)[x]/(x^e): coefficients are GF(p) elements, digit j is the x^j
// coefficient.
FiniteRing build_chain(int p, int e) {
  if (e < 1) throw SpecError("chain ring requires e >= 1");
  const detail::GaloisTables& gf = detail::galois_tables(p);
  long long ord = 1;
  for (int i = 0; i < e; ++i) {
    ord *= p;
    if (ord > kMaxOrder) throw SpecError("chain ring order exceeds limit");
  }
  const int n = static_cast<int>(ord);
  FiniteRing r;
  r.order = n;
  r.zero = 0;
  r.one = 1;
  r.add_tab.assign(static_cast<size_t>(n) * n, 0);
  r.mul_tab.assign(static_cast<size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a) {
    const std::vector<int> da = digits_of(a, p, e);
    for (Elem b = 0; b < n; ++b) {
      const std::vector<int> db = digits_of(b, p, e);
      std::vector<int> s(static_cast<size_t>(e)), m(static_cast<size_t>(e), 0);
      for (int i = 0; i < e; ++i)
        s[static_cast<size_t>(i)] = gf.add(da[static_cast<size_t>(i)],
                                           db[static_cast<size_t>(i)]);
      for (int i = 0; i < e; ++i)
        for (int j = 0; i + j < e; ++j)
          m[static_cast<size_t>(i + j)] =
              gf.add(m[static_cast<size_t>(i + j)],
                     gf.mul(da[static_cast<size_t>(i)],
                            db[static_cast<size_t>(j)]));
      r.add_tab[static_cast<size_t>(a) * n + b] = index_of(s, p);
      r.mul_tab[static_cast<size_t>(a) * n + b] = index_of(m, p);
    }
  }
  return r;
}

std::vector<Elem> read_table(const Json& j, const char* key, int expect_rows) {
  if (!j.contains(key) || !j[key].is_array())
    throw SpecError(std::string("ring spec: missing table '") + key + "'");
  const Json& rows = j[key];
  if (expect_rows >= 0 && static_cast<int>(rows.size()) != expect_rows)
    throw SpecError(std::string("ring spec: table '") + key +
                    "' has wrong row count");
  std::vector<Elem> out;
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != rows.size())
      throw SpecError(std::string("ring spec: table '") + key +
                      "' is not square");
    for (const Json& v : row) {
      if (!v.is_number_integer())
        throw SpecError(std::string("ring spec: table '") + key +
                        "' has a non-integer entry");
      out.push_back(v.get<int>());
    }
  }
  return out;
}

FiniteRing build_tables(const Json& spec) {
  FiniteRing r;
  r.add_tab = read_table(spec, "add", -1);
  const int n = static_cast<int>(spec["add"].size());
  if (n < 1) throw SpecError("ring spec: empty add table");
  r.mul_tab = read_table(spec, "mul", n);
  r.order = n;
  r.zero = get_int(spec, "zero");
  r.one = get_int(spec, "one");
  return r;
}

}  // namespace

RingPtr build_ring(const Json& spec) {
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
    throw SpecError("ring spec must be an object with a 'kind' string");
  const std::string kind = spec["kind"].get<std::string>();
  FiniteRing r;
  Json canon;
  if (kind == "zn") {
    const int n = get_int(spec, "n");
    r = build_zn(n);
    canon = Json{{"kind", "zn"}, {"n", n}};
  } else if (kind == "gf") {
    const int q = get_int(spec, "q");
    prime_power_decompose(q);
    r = build_gf(q);
    canon = Json{{"kind", "gf"}, {"q", q}};
  } else if (kind == "matrix") {
    const int m = get_int(spec, "m");
    const int q = get_int(spec, "q");
    prime_power_decompose(q);
    r = build_matrix(m, q);
    canon = Json{{"kind", "matrix"}, {"m", m}, {"q", q}};
  } else if (kind == "chain") {
    const int p = get_int(spec, "p");
    const int e = get_int(spec, "e");
    prime_power_decompose(p);
    r = build_chain(p, e);
    canon = Json{{"e", e}, {"kind", "chain"}, {"p", p}};
  } else if (kind == "tables") {
    r = build_tables(spec);
    canon = Json{{"add", spec["add"]},
                 {"kind", "tables"},
                 {"mul", spec["mul"]},
                 {"one", r.one},
                 {"zero", r.zero}};
  } else {
    throw SpecError("unknown ring kind '" + kind + "'");
  }
  finalize_ring(r, std::move(canon));
  return std::make_shared<const FiniteRing>(std::move(r));
}

LeftIdeal principal_left_ideal(const FiniteRing& r, Elem x) {
  std::vector<char> mark(static_cast<size_t>(r.order), 0);
  for (Elem s = 0; s < r.order; ++s) mark[static_cast<size_t>(r.mul(s, x))] = 1;
  LeftIdeal ideal;
  ideal.ring = &r;
  for (Elem e = 0; e < r.order; ++e)
    if (mark[static_cast<size_t>(e)]) ideal.elements.push_back(e);
  return ideal;
}

std::vector<LeftIdeal> left_ideals(const FiniteRing& r) {
  const int n = r.order;
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> list;
  auto add_ideal = [&](std::vector<Elem> v) {
    if (seen.insert(v).second) list.push_back(std::move(v));
  };
  for (Elem x = 0; x < n; ++x)
    add_ideal(principal_left_ideal(r, x).elements);
  std::vector<char> mark(static_cast<size_t>(n));
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (subset_of(list[j], list[i]) || subset_of(list[i], list[j])) continue;
      std::fill(mark.begin(), mark.end(), 0);
      for (Elem a : list[i])
        for (Elem b : list[j]) mark[static_cast<size_t>(r.add(a, b))] = 1;
      std::vector<Elem> s;
      for (Elem x = 0; x < n; ++x)
        if (mark[static_cast<size_t>(x)]) s.push_back(x);
      add_ideal(std::move(s));
    }
  }
  std::vector<LeftIdeal> out;
  out.reserve(list.size());
  for (auto& v : list) out.push_back(LeftIdeal{std::move(v), &r});
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

std::vector<LeftIdeal> maximal_left_ideals(const FiniteRing& r) {
  const std::vector<LeftIdeal> all = left_ideals(r);
  std::vector<LeftIdeal> out;
  for (const LeftIdeal& i : all) {
    if (static_cast<int>(i.size()) == r.order) continue;
    bool maximal = true;
    for (const LeftIdeal& j : all) {
      if (static_cast<int>(j.size()) == r.order || &j == &i) continue;
      if (j.size() > i.size() && subset_of(i.elements, j.elements)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

LeftIdeal jacobson_radical(const FiniteRing& r) {
  std::vector<char> in(static_cast<size_t>(r.order), 1);
  for (const LeftIdeal& m : maximal_left_ideals(r)) {
    std::vector<char> here(static_cast<size_t>(r.order), 0);
    for (Elem e : m.elements) here[static_cast<size_t>(e)] = 1;
    for (int i = 0; i < r.order; ++i)
      in[static_cast<size_t>(i)] =
          static_cast<char>(in[static_cast<size_t>(i)] && here[static_cast<size_t>(i)]);
  }
  LeftIdeal out;
  out.ring = &r;
  for (Elem e = 0; e < r.order; ++e)
    if (in[static_cast<size_t>(e)]) out.elements.push_back(e);
  return out;
}

namespace {

std::string ideal_str(const LeftIdeal& i) {
  std::string s = "{";
  for (size_t k = 0; k < i.elements.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(i.elements[k]);
  }
  return s + "}";
}

}  // namespace

bool is_chain_ring(const FiniteRing& r) {
  const std::vector<LeftIdeal> all = left_ideals(r);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (!subset_of(all[i].elements, all[j].elements) &&
          !subset_of(all[j].elements, all[i].elements))
        return false;
  return true;
}

std::vector<ChainLevel> chain_levels(const FiniteRing& r) {
  std::vector<LeftIdeal> all = left_ideals(r);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (!subset_of(all[i].elements, all[j].elements) &&
          !subset_of(all[j].elements, all[i].elements))
        throw SpecError("not a chain ring: left ideals " + ideal_str(all[i]) +
                        " and " + ideal_str(all[j]) + " are incomparable");
  // descending by inclusion == descending by size on a chain
  std::sort(all.begin(), all.end(),
            [](const LeftIdeal& a, const LeftIdeal& b) { return b.size() < a.size(); });
  std::vector<ChainLevel> levels;
  levels.reserve(all.size());
  for (size_t j = 0; j < all.size(); ++j) {
    Elem rep = r.zero;
    if (j + 1 < all.size()) {
      for (Elem e : all[j].elements)
        if (!all[j + 1].contains(e)) {
          rep = e;
          break;
        }
    }
    levels.push_back(ChainLevel{all[j], rep});
  }
  return levels;
}

std::optional<Elem> idempotent_generator(const FiniteRing& r,
                                         const LeftIdeal& ideal) {
  for (Elem e : ideal.elements) {
    if (r.mul(e, e) != e) continue;
    if (principal_left_ideal(r, e).elements == ideal.elements) return e;
  }
  return std::nullopt;
}

std::vector<LeftIdeal> two_sided_ideals(const FiniteRing& r) {
  std::vector<LeftIdeal> out;
  for (const LeftIdeal& i : left_ideals(r)) {
    bool closed = true;
    for (Elem x : i.elements) {
      for (Elem s = 0; s < r.order && closed; ++s)
        if (!i.contains(r.mul(x, s))) closed = false;
      if (!closed) break;
    }
    if (closed) out.push_back(i);
  }
  return out;
}

bool is_simple_ring(const FiniteRing& r) {
  if (jacobson_radical(r).size() != 1) return false;
  return two_sided_ideals(r).size() == 2;
}

}  // namespace epwb
