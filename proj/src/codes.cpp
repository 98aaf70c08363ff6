#include "epwb/codes.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "epwb/common.hpp"
#include "epwb/detail/hom_search.hpp"

namespace epwb {

namespace {

uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

Word zero_word(const FiniteModule& a, int n) {
  return Word(static_cast<size_t>(n), a.zero);
}

// span' = {s + r*g : s in span, r in R}; closed because r*g ranges over a
// cyclic submodule componentwise.
void extend_span(const FiniteModule& a, std::set<Word>& span, const Word& g,
                 size_t word_bound) {
  const int nr = a.ring->order;
  const int n = static_cast<int>(g.size());
  std::vector<Word> base(span.begin(), span.end());
  for (const Word& s : base) {
    for (Elem r = 0; r < nr; ++r) {
      Word u(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        u[static_cast<size_t>(i)] =
            a.add(s[static_cast<size_t>(i)],
                  a.act(r, g[static_cast<size_t>(i)]));
      span.insert(std::move(u));
      if (span.size() > word_bound)
        throw ResourceError("span exceeds the codeword bound of " +
                            std::to_string(word_bound));
    }
  }
}

}  // namespace

Code span_code(const ModulePtr& a, int n, const std::vector<Word>& gens,
               size_t word_bound) {
  if (n <= 0) throw SpecError("code length must be positive");
  for (const Word& g : gens) {
    if (static_cast<int>(g.size()) != n)
      throw SpecError("generator length does not match the code length");
    for (Elem c : g)
      if (c < 0 || c >= a->order)
        throw SpecError("generator entry out of range");
  }
  std::set<Word> span;
  span.insert(zero_word(*a, n));
  for (const Word& g : gens) extend_span(*a, span, g, word_bound);
  Code code;
  code.ambient = a;
  code.n = n;
  code.generators = gens;
  code.words.assign(span.begin(), span.end());
  return code;
}

std::vector<Word> canonical_generators(const ModulePtr& a,
                                       const std::vector<Word>& words) {
  if (words.empty()) return {};
  const int n = static_cast<int>(words[0].size());
  std::set<Word> span;
  span.insert(zero_word(*a, n));
  std::vector<Word> gens;
  while (span.size() < words.size()) {
    Word pick;
    bool found = false;
    for (const Word& w : words) {
      if (!span.count(w)) {
        pick = w;
        found = true;
        break;
      }
    }
    if (!found)
      throw InternalInconsistency("code word list is smaller than its span");
    gens.push_back(pick);
    extend_span(*a, span, pick, words.size());
  }
  return gens;
}

std::vector<Code> enumerate_codes(const ModulePtr& a, int n, int gen_max,
                                  const Bounds& bounds) {
  if (n <= 0) throw SpecError("code length must be positive");
  if (gen_max < 0) throw SpecError("generator limit must be nonnegative");

  uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total = sat_mul(total, static_cast<uint64_t>(a->order));
    if (total > bounds.max_tuples)
      throw ResourceError("tuple space |A|^" + std::to_string(n) +
                          " exceeds the bound of " +
                          std::to_string(bounds.max_tuples));
  }
  std::vector<Word> tuples;
  tuples.reserve(static_cast<size_t>(total));
  Word cur = zero_word(*a, n);
  for (;;) {
    tuples.push_back(cur);
    int i = n - 1;
    while (i >= 0) {
      if (++cur[static_cast<size_t>(i)] < a->order) break;
      cur[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }

  std::set<std::vector<Word>> seen;
  std::vector<Code> out;
  auto add_span = [&](const std::vector<Word>& gens) {
    Code c = span_code(a, n, gens, bounds.word_bound);
    if (!seen.insert(c.words).second) return;
    if (seen.size() > bounds.max_codes)
      throw ResourceError("distinct code count exceeds the bound of " +
                          std::to_string(bounds.max_codes));
    c.generators = canonical_generators(a, c.words);
    out.push_back(std::move(c));
  };

  add_span({});
  std::vector<size_t> combo;
  auto rec = [&](auto&& self, int need, size_t start) -> void {
    if (need == 0) {
      std::vector<Word> gens;
      for (size_t idx : combo) gens.push_back(tuples[idx]);
      add_span(gens);
      return;
    }
    for (size_t i = start; i + static_cast<size_t>(need) <= tuples.size(); ++i) {
      combo.push_back(i);
      self(self, need - 1, i + 1);
      combo.pop_back();
    }
  };
  for (int k = 1; k <= gen_max; ++k) rec(rec, k, 0);

  std::sort(out.begin(), out.end(), [](const Code& x, const Code& y) {
    if (x.words.size() != y.words.size())
      return x.words.size() < y.words.size();
    return x.words < y.words;
  });
  return out;
}

detail::TableView CodeTable::view() const {
  return detail::TableView{words, code->ambient->ring->order, add_tab.data(),
                           act_tab.data(), zero_index};
}

int word_index(const Code& c, const Word& w) {
  auto it = std::lower_bound(c.words.begin(), c.words.end(), w);
  if (it == c.words.end() || *it != w) return -1;
  return static_cast<int>(it - c.words.begin());
}

CodeTable make_code_table(const Code& c, size_t limit) {
  if (c.words.size() > limit)
    throw ResourceError("code with " + std::to_string(c.words.size()) +
                        " words exceeds the isomorphism-search limit of " +
                        std::to_string(limit));
  const FiniteModule& a = *c.ambient;
  CodeTable t;
  t.code = &c;
  t.words = static_cast<int>(c.words.size());
  const size_t w = c.words.size();
  t.zero_index = word_index(c, zero_word(a, c.n));
  if (t.zero_index < 0)
    throw InternalInconsistency("code does not contain the zero word");

  Word buf(static_cast<size_t>(c.n));
  t.add_tab.assign(w * w, -1);
  for (size_t i = 0; i < w; ++i) {
    for (size_t j = 0; j < w; ++j) {
      for (int k = 0; k < c.n; ++k)
        buf[static_cast<size_t>(k)] = a.add(c.words[i][static_cast<size_t>(k)],
                                            c.words[j][static_cast<size_t>(k)]);
      int idx = word_index(c, buf);
      if (idx < 0)
        throw InternalInconsistency("code is not closed under addition");
      t.add_tab[i * w + j] = idx;
    }
  }
  t.act_tab.assign(static_cast<size_t>(a.ring->order) * w, -1);
  for (Elem r = 0; r < a.ring->order; ++r) {
    for (size_t j = 0; j < w; ++j) {
      for (int k = 0; k < c.n; ++k)
        buf[static_cast<size_t>(k)] = a.act(r, c.words[j][static_cast<size_t>(k)]);
      int idx = word_index(c, buf);
      if (idx < 0)
        throw InternalInconsistency("code is not closed under the ring action");
      t.act_tab[static_cast<size_t>(r) * w + j] = idx;
    }
  }
  return t;
}

void for_each_isomorphism(const Code& c1, const Code& c2,
                          const WeightContext* ctx, WeightKind kind,
                          bool filtered, const Bounds& bounds,
                          const std::function<bool(const LinearIso&)>& visit) {
  if (c1.words.size() != c2.words.size()) return;
  CodeTable t1 = make_code_table(c1, bounds.code_table_limit);
  CodeTable t2 = make_code_table(c2, bounds.code_table_limit);

  std::vector<Word> gens = canonical_generators(c1.ambient, c1.words);
  std::vector<Elem> gen_idx;
  for (const Word& g : gens) gen_idx.push_back(word_index(c1, g));

  std::vector<std::vector<int>> prof1, prof2;
  if (filtered) {
    for (const Word& w : c1.words) prof1.push_back(profile_counts(*ctx, kind, w));
    for (const Word& w : c2.words) prof2.push_back(profile_counts(*ctx, kind, w));
  }

  detail::HomSearchOptions opts;
  opts.injective = true;
  if (filtered)
    opts.accept = [&](Elem x, Elem y) {
      return prof1[static_cast<size_t>(x)] == prof2[static_cast<size_t>(y)];
    };
  opts.visit = [&](const std::vector<Elem>& images) {
    LinearIso iso;
    iso.word_map.assign(images.begin(), images.end());
    for (Elem gi : gen_idx)
      iso.gen_images.push_back(
          c2.words[static_cast<size_t>(images[static_cast<size_t>(gi)])]);
    return visit(iso);
  };
  std::vector<Elem> all;
  for (int i = 0; i < t1.words; ++i) all.push_back(i);
  detail::search_homs(t1.view(), all, gen_idx, t2.view(), opts);
}

std::vector<LinearIso> linear_isomorphisms(const Code& c1, const Code& c2,
                                           const Bounds& bounds) {
  std::vector<LinearIso> out;
  for_each_isomorphism(c1, c2, nullptr, WeightKind::hamming, false, bounds,
                       [&](const LinearIso& iso) {
                         out.push_back(iso);
                         return true;
                       });
  return out;
}

std::vector<LinearIso> preserving_isomorphisms(const Code& c1, const Code& c2,
                                               const WeightContext& ctx,
                                               WeightKind kind,
                                               const Bounds& bounds) {
  std::vector<LinearIso> out;
  for_each_isomorphism(c1, c2, &ctx, kind, true, bounds,
                       [&](const LinearIso& iso) {
                         out.push_back(iso);
                         return true;
                       });
  return out;
}

MonomialExtension extend_to_monomial(const Code& c1, const Code& c2,
                                     const LinearIso& f,
                                     const SymmetryGroup& g) {
  MonomialExtension out;
  const int n = c1.n;
  if (c2.n != n) {
    out.searched = 0;
    return out;
  }
  std::vector<Word> gens = canonical_generators(c1.ambient, c1.words);
  std::vector<Word> images;
  for (const Word& w : gens) {
    int k = word_index(c1, w);
    images.push_back(
        c2.words[static_cast<size_t>(f.word_map[static_cast<size_t>(k)])]);
  }

  std::vector<int> sigma(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<size_t>(i)] = i;
  do {
    MonomialTransformation t;
    t.n = n;
    t.sigma = sigma;
    t.taus.assign(static_cast<size_t>(n), -1);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int chosen = -1;
      for (int tau = 0; tau < g.size() && chosen < 0; ++tau) {
        bool match = true;
        for (size_t gi = 0; gi < gens.size(); ++gi) {
          Elem src = gens[gi][static_cast<size_t>(sigma[static_cast<size_t>(i)])];
          if (g.apply(tau, src) != images[gi][static_cast<size_t>(i)]) {
            match = false;
            break;
          }
        }
        if (match) chosen = tau;
      }
      if (chosen < 0)
        ok = false;
      else
        t.taus[static_cast<size_t>(i)] = chosen;
    }
    if (!ok) continue;
    bool sound = true;
    for (size_t k = 0; k < c1.words.size() && sound; ++k)
      sound = apply_monomial(g, t, c1.words[k]) ==
              c2.words[static_cast<size_t>(f.word_map[k])];
    if (sound) {
      out.found = true;
      out.transform = std::move(t);
      return out;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  uint64_t space = 1;
  for (int i = 2; i <= n; ++i) space = sat_mul(space, static_cast<uint64_t>(i));
  for (int i = 0; i < n; ++i)
    space = sat_mul(space, static_cast<uint64_t>(g.size()));
  out.searched = space;
  return out;
}

PreservationCertificate chain_peel_certificate(
    const Code& c1, const Code& c2, const LinearIso& f,
    const std::vector<ChainLevel>& levels) {
  const FiniteModule& a = *c1.ambient;
  auto expect = chain_levels(*a.ring);
  bool match = expect.size() == levels.size();
  for (size_t j = 0; match && j < levels.size(); ++j)
    match = levels[j].ideal.elements == expect[j].ideal.elements &&
            levels[j].representative == expect[j].representative;
  if (!match)
    throw SpecError("level list does not match the ring's ideal chain");
  if (c1.words.size() != c2.words.size() || c1.n != c2.n)
    throw SpecError("certificate requires codes of equal size and length");

  PreservationCertificate cert;
  cert.method = "chain";
  for (size_t k = 0; k < c1.words.size(); ++k) {
    const Word& c = c1.words[k];
    const Word& b = c2.words[static_cast<size_t>(f.word_map[k])];
    CodewordPeel peel;
    peel.word = static_cast<int>(k);
    for (const ChainLevel& lv : levels) {
      PeelStage st;
      st.ideal = lv.ideal.elements;
      st.actor = lv.representative;
      for (int i = 0; i < c1.n; ++i) {
        if (a.act(st.actor, c[static_cast<size_t>(i)]) == a.zero)
          ++st.count_source;
        if (a.act(st.actor, b[static_cast<size_t>(i)]) == a.zero)
          ++st.count_target;
      }
      bool bad = st.count_source != st.count_target;
      peel.stages.push_back(std::move(st));
      if (bad) {
        cert.violation = PeelViolation{static_cast<int>(k),
                                       peel.stages.size() - 1};
        cert.codewords.push_back(std::move(peel));
        return cert;
      }
    }
    cert.codewords.push_back(std::move(peel));
  }
  cert.complete = true;
  return cert;
}

PreservationCertificate idempotent_peel_certificate(const Code& c1,
                                                    const Code& c2,
                                                    const LinearIso& f) {
  const FiniteModule& a = *c1.ambient;
  const FiniteRing& r = *a.ring;
  if (!is_simple_ring(r))
    throw SpecError("idempotent peel requires a simple ring");
  if (c1.words.size() != c2.words.size() || c1.n != c2.n)
    throw SpecError("certificate requires codes of equal size and length");

  PreservationCertificate cert;
  cert.method = "idempotent";
  for (size_t k = 0; k < c1.words.size(); ++k) {
    const Word& c = c1.words[k];
    const Word& b = c2.words[static_cast<size_t>(f.word_map[k])];
    CodewordPeel peel;
    peel.word = static_cast<int>(k);
    std::vector<int> rem_s, rem_t;
    for (int i = 0; i < c1.n; ++i) {
      rem_s.push_back(i);
      rem_t.push_back(i);
    }
    while (!rem_s.empty() || !rem_t.empty()) {
      std::set<std::vector<Elem>> anns;
      for (int i : rem_s)
        anns.insert(annihilator(a, c[static_cast<size_t>(i)]).elements);
      for (int i : rem_t)
        anns.insert(annihilator(a, b[static_cast<size_t>(i)]).elements);
      // maximal by inclusion, smallest canonical on ties
      std::vector<Elem> chosen;
      bool have = false;
      for (const auto& cand : anns) {
        bool maximal = true;
        for (const auto& other : anns) {
          if (other.size() <= cand.size()) continue;
          if (std::includes(other.begin(), other.end(), cand.begin(),
                            cand.end()))
            maximal = false;
        }
        if (!maximal) continue;
        if (!have || cand.size() < chosen.size() ||
            (cand.size() == chosen.size() && cand < chosen)) {
          chosen = cand;
          have = true;
        }
      }
      LeftIdeal ideal{chosen, &r};
      auto e = idempotent_generator(r, ideal);
      if (!e)
        throw InternalInconsistency(
            "coordinate annihilator has no idempotent generator");
      PeelStage st;
      st.ideal = chosen;
      st.actor = *e;
      std::vector<int> keep_s, keep_t;
      for (int i : rem_s) {
        if (a.act(st.actor, c[static_cast<size_t>(i)]) == a.zero)
          ++st.count_source;
        else
          keep_s.push_back(i);
      }
      for (int i : rem_t) {
        if (a.act(st.actor, b[static_cast<size_t>(i)]) == a.zero)
          ++st.count_target;
        else
          keep_t.push_back(i);
      }
      rem_s = std::move(keep_s);
      rem_t = std::move(keep_t);
      bool bad = st.count_source != st.count_target;
      peel.stages.push_back(std::move(st));
      if (bad) {
        cert.violation = PeelViolation{static_cast<int>(k),
                                       peel.stages.size() - 1};
        cert.codewords.push_back(std::move(peel));
        return cert;
      }
    }
    cert.codewords.push_back(std::move(peel));
  }
  cert.complete = true;
  return cert;
}

std::vector<std::pair<uint32_t, uint32_t>> profile_matched_pairs(
    const std::vector<Code>& codes, const WeightContext& ctx, WeightKind kind) {
  std::vector<std::vector<int>> key(codes.size());
  for (size_t c = 0; c < codes.size(); ++c) {
    std::vector<std::vector<int>> profs;
    for (const Word& w : codes[c].words)
      profs.push_back(profile_counts(ctx, kind, w));
    std::sort(profs.begin(), profs.end());
    for (const auto& p : profs) {
      key[c].insert(key[c].end(), p.begin(), p.end());
      key[c].push_back(-1);
    }
  }
  std::map<std::vector<int>, std::vector<uint32_t>> buckets;
  for (size_t c = 0; c < codes.size(); ++c)
    buckets[key[c]].push_back(static_cast<uint32_t>(c));
  std::vector<std::pair<uint32_t, uint32_t>> tasks;
  for (size_t c = 0; c < codes.size(); ++c)
    for (uint32_t j : buckets[key[c]])
      tasks.emplace_back(static_cast<uint32_t>(c), j);
  return tasks;
}

namespace {

struct PairResult {
  uint64_t isos = 0;
  uint64_t extended = 0;
  bool failed = false;
  LinearIso fail_iso;
  uint64_t fail_space = 0;
  bool resource_error = false;
  std::string error;
};

}  // namespace

EPOutcome ep_scan(const ModulePtr& a, const SymmetryGroup& g, WeightKind kind,
                  int n_from, int n_max, int gen_max, const Bounds& bounds,
                  int jobs) {
  if (n_from < 1) throw SpecError("starting length must be at least 1");
  if (n_max < n_from) throw SpecError("length range is empty");
  EPOutcome out;
  WeightContext ctx = make_weight_context(a, g);
  const uint64_t unlimited = UINT64_MAX;
  uint64_t budget_left =
      bounds.budget_pairs == 0 ? unlimited : bounds.budget_pairs;

  for (int n = n_from; n <= n_max; ++n) {
    SpaceLevel lv;
    lv.n = n;
    std::vector<Code> codes;
    try {
      codes = enumerate_codes(a, n, gen_max, bounds);
    } catch (const ResourceError& e) {
      out.verdict = "inconclusive";
      out.note = e.what();
      return out;
    }
    lv.codes = codes.size();

    std::vector<std::pair<uint32_t, uint32_t>> tasks =
        profile_matched_pairs(codes, ctx, kind);
    lv.pairs_total = tasks.size();

    size_t limit = tasks.size();
    bool budget_cut = false;
    if (budget_left != unlimited && static_cast<uint64_t>(limit) > budget_left) {
      limit = static_cast<size_t>(budget_left);
      budget_cut = true;
    }
    if (budget_left != unlimited) budget_left -= static_cast<uint64_t>(limit);

    std::vector<PairResult> results(limit);
    std::atomic<int64_t> best_stop{-1};
    std::atomic<size_t> next{0};

    auto worker = [&]() {
      for (;;) {
        size_t t = next.fetch_add(1);
        if (t >= limit) break;
        int64_t bs = best_stop.load();
        if (bs >= 0 && static_cast<int64_t>(t) > bs) continue;
        PairResult& res = results[t];
        const Code& c1 = codes[tasks[t].first];
        const Code& c2 = codes[tasks[t].second];
        auto mark_stop = [&]() {
          int64_t cur = best_stop.load();
          while ((cur < 0 || static_cast<int64_t>(t) < cur) &&
                 !best_stop.compare_exchange_weak(cur, static_cast<int64_t>(t))) {
          }
        };
        try {
          for_each_isomorphism(
              c1, c2, &ctx, kind, true, bounds, [&](const LinearIso& iso) {
                ++res.isos;
                MonomialExtension ext = extend_to_monomial(c1, c2, iso, g);
                if (ext.found) {
                  ++res.extended;
                  return true;
                }
                res.failed = true;
                res.fail_iso = iso;
                res.fail_space = ext.searched;
                mark_stop();
                return false;
              });
        } catch (const ResourceError& e) {
          res.resource_error = true;
          res.error = e.what();
          mark_stop();
        }
      }
    };

    if (jobs <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    size_t stop = limit;
    for (size_t t = 0; t < limit; ++t) {
      if (results[t].failed || results[t].resource_error) {
        stop = t;
        break;
      }
    }
    for (size_t t = 0; t < stop; ++t) {
      lv.isomorphisms += results[t].isos;
      lv.extended += results[t].extended;
    }
    if (stop < limit) {
      const PairResult& res = results[stop];
      lv.pairs_scanned = stop + 1;
      lv.isomorphisms += res.isos;
      lv.extended += res.extended;
      out.space.push_back(lv);
      if (res.resource_error) {
        out.verdict = "inconclusive";
        out.note = res.error;
        return out;
      }
      out.verdict = "counterexample";
      EPWitness w;
      w.n = n;
      w.source = codes[tasks[stop].first];
      w.target = codes[tasks[stop].second];
      w.iso = res.fail_iso;
      w.sigma_tau_space = res.fail_space;
      out.witness = std::move(w);
      return out;
    }
    lv.pairs_scanned = limit;
    out.space.push_back(lv);
    if (budget_cut) {
      out.verdict = "inconclusive";
      out.note = "pair budget exhausted at length " + std::to_string(n);
      return out;
    }
  }
  out.verdict = "completed";
  return out;
}

ImplicationCheck weight_implication_check(const ModulePtr& a,
                                          const SymmetryGroup& g, int n_max,
                                          int gen_max, const Bounds& bounds) {
  ImplicationCheck r;
  WeightContext ctx = make_weight_context(a, g);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Code> codes = enumerate_codes(a, n, gen_max, bounds);
    for (const Code& c1 : codes) {
      for (const Code& c2 : codes) {
        if (c1.words.size() != c2.words.size()) continue;
        for_each_isomorphism(
            c1, c2, nullptr, WeightKind::hamming, false, bounds,
            [&](const LinearIso& iso) {
              ++r.isomorphisms;
              std::vector<Word> image;
              for (size_t k = 0; k < c1.words.size(); ++k)
                image.push_back(
                    c2.words[static_cast<size_t>(iso.word_map[k])]);
              bool h = profile_preserved(ctx, WeightKind::hamming, c1.words, image);
              bool s = profile_preserved(ctx, WeightKind::swc, c1.words, image);
              bool w = profile_preserved(ctx, WeightKind::aw, c1.words, image);
              if (h) ++r.hamming_preserving;
              if (s) ++r.swc_preserving;
              if (w) ++r.aw_preserving;
              if ((s || w) && !h) ++r.violations;
              return true;
            });
      }
    }
  }
  return r;
}

}  // namespace epwb
