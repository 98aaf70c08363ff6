#include "epwb/scenario.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace epwb {

namespace {

Json bounds_json(const Bounds& b) {
  return Json{{"budget_pairs", b.budget_pairs},
              {"max_codes", b.max_codes},
              {"max_tuples", b.max_tuples},
              {"table_limit", b.code_table_limit},
              {"word_bound", b.word_bound}};
}

int get_int(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer())
    throw SpecError(std::string("scenario field ") + key +
                    " must be an integer");
  return j[key].get<int>();
}

}  // namespace

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw SpecError("scenario must be a JSON object");
  static const std::set<std::string> known = {
      "ring",    "module",  "group",       "weight",     "mode",
      "n_from",  "n_max",   "gen_max",     "budget_pairs",
      "word_bound", "max_codes", "max_tuples", "table_limit"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key()))
      throw SpecError("unknown scenario field: " + it.key());

  Scenario s;
  if (!j.contains("ring")) throw SpecError("scenario is missing the ring spec");
  s.ring_spec = j["ring"];
  if (!j.contains("module"))
    throw SpecError("scenario is missing the module spec");
  s.module_spec = j["module"];
  if (j.contains("group")) s.group_spec = j["group"];
  if (j.contains("weight"))
    s.kind = weight_kind_from_string(j["weight"].get<std::string>());
  if (j.contains("mode")) s.mode = j["mode"].get<std::string>();
  s.n_from = get_int(j, "n_from", s.n_from);
  s.n_max = get_int(j, "n_max", s.n_max);
  s.gen_max = get_int(j, "gen_max", s.gen_max);
  if (j.contains("budget_pairs"))
    s.bounds.budget_pairs = j["budget_pairs"].get<uint64_t>();
  if (j.contains("word_bound"))
    s.bounds.word_bound = j["word_bound"].get<size_t>();
  if (j.contains("max_codes"))
    s.bounds.max_codes = j["max_codes"].get<size_t>();
  if (j.contains("max_tuples"))
    s.bounds.max_tuples = j["max_tuples"].get<size_t>();
  if (j.contains("table_limit"))
    s.bounds.code_table_limit = j["table_limit"].get<size_t>();
  return s;
}

Workbench make_workbench(const Scenario& s, const Cache& cache) {
  Workbench wb;
  wb.scenario = s;
  wb.ring = build_ring(s.ring_spec);
  wb.module = build_module(wb.ring, s.module_spec);

  Json group_canon;
  if (s.group_spec.is_string() && s.group_spec.get<std::string>() == "full-aut") {
    wb.group = cached_aut_group(cache, wb.module);
    wb.group_is_full_aut = true;
    group_canon = "full-aut";
  } else if (s.group_spec.is_string() &&
             s.group_spec.get<std::string>() == "trivial") {
    wb.group = subgroup_closure(wb.module, {});
    group_canon = "trivial";
  } else if (s.group_spec.is_array()) {
    auto gens = s.group_spec.get<std::vector<std::vector<Elem>>>();
    wb.group = subgroup_closure(wb.module, gens);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    group_canon = gens;
  } else {
    throw SpecError(
        "group must be \"full-aut\", \"trivial\", or a list of image arrays");
  }

  wb.canonical = Json{{"bounds", bounds_json(s.bounds)},
                      {"gen_max", s.gen_max},
                      {"group", group_canon},
                      {"mode", s.mode},
                      {"module", wb.module->spec},
                      {"n_from", s.n_from},
                      {"n_max", s.n_max},
                      {"ring", wb.ring->spec},
                      {"weight", to_string(s.kind)}};
  return wb;
}

Classification classify_module(const ModulePtr& a,
                               const SymmetryGroup& full_aut) {
  Classification c;
  c.pseudo_injective = is_pseudo_injective(*a).pseudo_injective;
  c.socle_cyclic = is_cyclic(*a, socle(*a));
  ModulePtr chars = character_module(a->ring);
  c.embeds_in_character = embeds_in(a, chars).has_value();
  if (c.socle_cyclic != c.embeds_in_character)
    throw InternalInconsistency(
        "socle test and character-module embedding disagree for " +
        a->spec_key);
  auto classes = rho_classes(*a);
  c.rho_class_count = static_cast<int>(classes.size());
  OrbitIndex idx = orbits(*a, full_aut);
  c.orbit_count = idx.orbit_count;
  c.automorphisms = full_aut.size();

  std::vector<std::vector<Elem>> orbit_parts(
      static_cast<size_t>(idx.orbit_count));
  for (Elem x = 0; x < a->order; ++x)
    orbit_parts[static_cast<size_t>(idx.orbit_of[static_cast<size_t>(x)])]
        .push_back(x);
  std::vector<std::vector<Elem>> rho_parts;
  for (const auto& cls : classes) rho_parts.push_back(cls.members);
  c.partitions_equal = orbit_parts == rho_parts;
  return c;
}

Json classification_json(const Classification& c) {
  return Json{{"automorphisms", c.automorphisms},
              {"embeds_in_character", c.embeds_in_character},
              {"orbit_count", c.orbit_count},
              {"partitions_equal", c.partitions_equal},
              {"pseudo_injective", c.pseudo_injective},
              {"rho_class_count", c.rho_class_count},
              {"socle_cyclic", c.socle_cyclic}};
}

std::optional<bool> predicted_ep(const Classification& c, WeightKind kind,
                                 bool group_is_full_aut) {
  if (!group_is_full_aut) return std::nullopt;
  switch (kind) {
    case WeightKind::swc:
      return c.socle_cyclic;
    case WeightKind::hamming:
      return c.pseudo_injective && c.socle_cyclic;
    case WeightKind::aw:
      if (c.pseudo_injective) return c.socle_cyclic;
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

Json ideal_list_json(const std::vector<LeftIdeal>& ideals) {
  Json out = Json::array();
  for (const auto& ideal : ideals) out.push_back(ideal.elements);
  return out;
}

Json code_json(const Code& c) {
  return Json{{"generators", c.generators},
              {"n", c.n},
              {"words", c.words.size()}};
}

Json witness_json(const EPWitness& w) {
  return Json{{"generator_images", w.iso.gen_images},
              {"n", w.n},
              {"sigma_tau_space", w.sigma_tau_space},
              {"source", code_json(w.source)},
              {"target", code_json(w.target)}};
}

Json space_json(const std::vector<SpaceLevel>& space) {
  Json out = Json::array();
  for (const auto& lv : space)
    out.push_back(Json{{"codes", lv.codes},
                       {"extended", lv.extended},
                       {"isomorphisms", lv.isomorphisms},
                       {"n", lv.n},
                       {"pairs_scanned", lv.pairs_scanned},
                       {"pairs_total", lv.pairs_total}});
  return out;
}

Json certificate_json(const PreservationCertificate& cert) {
  Json words = Json::array();
  for (const auto& peel : cert.codewords) {
    Json stages = Json::array();
    for (const auto& st : peel.stages)
      stages.push_back(Json{{"actor", st.actor},
                            {"count_source", st.count_source},
                            {"count_target", st.count_target},
                            {"ideal", st.ideal}});
    words.push_back(Json{{"stages", std::move(stages)}, {"word", peel.word}});
  }
  Json out{{"complete", cert.complete},
           {"codewords", std::move(words)},
           {"method", cert.method}};
  if (cert.violation)
    out["violation"] =
        Json{{"stage", cert.violation->stage}, {"word", cert.violation->word}};
  else
    out["violation"] = nullptr;
  return out;
}

int ep_exit_code(const std::string& verdict, const std::optional<bool>& pred,
                 const std::string& mode) {
  if (verdict == "inconclusive") return 2;
  if (verdict == "counterexample") return (pred && *pred) ? 1 : 0;
  if (pred && !*pred) return 2;  // predicted failure not exhibited in bounds
  if (!pred && mode == "search") return 2;
  return 0;
}

RunResult run_certify(const Workbench& wb, Json report) {
  const Scenario& s = wb.scenario;
  const FiniteRing& ring = *wb.ring;
  const bool chain = is_chain_ring(ring);
  if (!chain && !is_simple_ring(ring))
    throw SpecError("certification requires a chain ring or a simple ring");
  std::vector<ChainLevel> levels;
  if (chain) levels = chain_levels(ring);

  WeightContext ctx = make_weight_context(wb.module, wb.group);
  uint64_t isos = 0, complete_count = 0;
  Json violations = Json::array();
  Json sample;
  for (int n = s.n_from; n <= s.n_max; ++n) {
    std::vector<Code> codes = enumerate_codes(wb.module, n, s.gen_max, s.bounds);
    auto tasks = profile_matched_pairs(codes, ctx, WeightKind::hamming);
    for (const auto& task : tasks) {
      const Code& c1 = codes[task.first];
      const Code& c2 = codes[task.second];
      for_each_isomorphism(
          c1, c2, &ctx, WeightKind::hamming, true, s.bounds,
          [&](const LinearIso& iso) {
            ++isos;
            PreservationCertificate cert =
                chain ? chain_peel_certificate(c1, c2, iso, levels)
                      : idempotent_peel_certificate(c1, c2, iso);
            if (cert.complete) {
              ++complete_count;
            } else {
              violations.push_back(
                  Json{{"certificate", certificate_json(cert)},
                       {"n", n},
                       {"source", code_json(c1)},
                       {"target", code_json(c2)}});
            }
            if (sample.is_null()) sample = certificate_json(cert);
            return true;
          });
    }
  }
  report["certificates"] = isos;
  report["complete"] = complete_count;
  report["sample"] = sample.is_null() ? Json() : sample;
  report["violations"] = violations;
  const bool ok = complete_count == isos;
  report["verdict"] = ok ? "certified" : "violation";
  return RunResult{report, ok ? 0 : 1};
}

}  // namespace

RunResult run_ep(const Scenario& s, const Cache& cache) {
  if (s.mode != "verify" && s.mode != "search" && s.mode != "certify")
    throw SpecError("unknown mode: " + s.mode);
  Workbench wb = make_workbench(s, cache);
  SymmetryGroup full =
      wb.group_is_full_aut ? wb.group : cached_aut_group(cache, wb.module);
  const bool is_full = wb.group.size() == full.size();
  Classification cls = classify_module(wb.module, full);
  std::optional<bool> pred = predicted_ep(cls, s.kind, is_full);

  Json report;
  report["classification"] = classification_json(cls);
  report["mode"] = s.mode;
  report["prediction"] = pred ? Json(*pred ? "holds" : "fails") : Json();
  report["scenario"] = wb.canonical;

  if (s.mode == "certify") return run_certify(wb, std::move(report));

  EPOutcome oc = ep_scan(wb.module, wb.group, s.kind, s.n_from, s.n_max,
                         s.gen_max, s.bounds, s.jobs);
  std::string verdict = oc.verdict;
  if (verdict == "completed")
    verdict = s.mode == "verify" ? "all-extendable" : "exhausted";
  report["verdict"] = verdict;
  if (!oc.note.empty()) report["note"] = oc.note;
  report["space"] = space_json(oc.space);
  report["witness"] = oc.witness ? witness_json(*oc.witness) : Json();
  return RunResult{report, ep_exit_code(verdict, pred, s.mode)};
}

RunResult run_ring_info(const Json& ring_spec, const Cache& cache) {
  RingPtr r = build_ring(ring_spec);
  std::vector<LeftIdeal> ideals = cached_left_ideals(cache, r);
  Json report{{"is_chain", is_chain_ring(*r)},
              {"is_simple", is_simple_ring(*r)},
              {"left_ideals", ideal_list_json(ideals)},
              {"maximal_left_ideals", ideal_list_json(maximal_left_ideals(*r))},
              {"order", r->order},
              {"radical", jacobson_radical(*r).elements},
              {"spec", r->spec},
              {"two_sided_ideals", ideal_list_json(two_sided_ideals(*r))}};
  if (report["is_chain"].get<bool>()) {
    Json lv = Json::array();
    for (const auto& level : chain_levels(*r))
      lv.push_back(Json{{"ideal", level.ideal.elements},
                        {"representative", level.representative}});
    report["chain_levels"] = lv;
  }
  return RunResult{report, 0};
}

RunResult run_module_info(const Json& ring_spec, const Json& module_spec,
                          const Cache& cache) {
  RingPtr r = build_ring(ring_spec);
  ModulePtr a = build_module(r, module_spec);
  SymmetryGroup g = cached_aut_group(cache, a);
  std::vector<Submodule> subs = cached_submodules(cache, a);
  Json sub_json = Json::array();
  for (const auto& s : subs) sub_json.push_back(s.elements);
  Json rho = Json::array();
  for (const auto& cls : rho_classes(*a))
    rho.push_back(Json{{"ideal", cls.ann.elements}, {"members", cls.members}});
  OrbitIndex idx = orbits(*a, g);
  Submodule soc = socle(*a);
  PseudoInjectivity pi = is_pseudo_injective(*a);

  Json report{{"automorphisms", g.size()},
              {"module", a->spec},
              {"orbit_count", idx.orbit_count},
              {"orbit_representatives", idx.representative},
              {"order", a->order},
              {"pseudo_injective", pi.pseudo_injective},
              {"rho_classes", rho},
              {"ring", r->spec},
              {"socle", soc.elements},
              {"socle_cyclic", is_cyclic(*a, soc)},
              {"submodules", sub_json}};
  return RunResult{report, 0};
}

RunResult run_classify(const Json& ring_spec, const Json& module_spec,
                       const Cache& cache) {
  RingPtr r = build_ring(ring_spec);
  ModulePtr a = build_module(r, module_spec);
  SymmetryGroup full = cached_aut_group(cache, a);
  Classification cls = classify_module(a, full);
  auto tag = [&](WeightKind k) -> Json {
    auto p = predicted_ep(cls, k, true);
    return p ? Json(*p ? "holds" : "fails") : Json();
  };
  Json report{{"classification", classification_json(cls)},
              {"module", a->spec},
              {"predictions", Json{{"aw", tag(WeightKind::aw)},
                                   {"hamming", tag(WeightKind::hamming)},
                                   {"swc", tag(WeightKind::swc)}}},
              {"ring", r->spec}};
  return RunResult{report, 0};
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  std::function<void(const std::string&, const Json&, int)> emit =
      [&](const std::string& key, const Json& value, int depth) {
        std::string pad(static_cast<size_t>(depth) * 2, ' ');
        if (value.is_object()) {
          out << pad << key << ":\n";
          for (auto it = value.begin(); it != value.end(); ++it)
            emit(it.key(), it.value(), depth + 1);
        } else if (value.is_array() &&
                   std::all_of(value.begin(), value.end(),
                               [](const Json& v) { return v.is_object(); }) &&
                   !value.empty()) {
          out << pad << key << ":\n";
          for (size_t i = 0; i < value.size(); ++i)
            emit("- " + std::to_string(i), value[i], depth + 1);
        } else {
          out << pad << key << ": " << value.dump() << "\n";
        }
      };
  for (auto it = report.begin(); it != report.end(); ++it)
    emit(it.key(), it.value(), 0);
  return out.str();
}

}  // namespace epwb
