#include "epwb/weights.hpp"

#include <algorithm>

#include "epwb/common.hpp"

namespace epwb {

std::string to_string(WeightKind k) {
  switch (k) {
    case WeightKind::hamming: return "hamming";
    case WeightKind::swc: return "swc";
    case WeightKind::aw: return "aw";
  }
  return "hamming";
}

WeightKind weight_kind_from_string(const std::string& s) {
  if (s == "hamming") return WeightKind::hamming;
  if (s == "swc") return WeightKind::swc;
  if (s == "aw") return WeightKind::aw;
  throw SpecError("unknown weight kind: " + s);
}

WeightContext make_weight_context(const ModulePtr& a, const SymmetryGroup& g) {
  WeightContext ctx;
  ctx.module = a;
  ctx.rho_of.assign(static_cast<size_t>(a->order), -1);
  auto classes = rho_classes(*a);
  for (size_t c = 0; c < classes.size(); ++c) {
    ctx.rho_ideals.push_back(classes[c].ann);
    for (Elem x : classes[c].members)
      ctx.rho_of[static_cast<size_t>(x)] = static_cast<int>(c);
  }
  ctx.orbit = orbits(*a, g);
  return ctx;
}

int hamming_weight(const FiniteModule& a, const Word& x) {
  int w = 0;
  for (Elem c : x)
    if (c != a.zero) ++w;
  return w;
}

std::vector<int> profile_counts(const WeightContext& ctx, WeightKind kind,
                                const Word& x) {
  const FiniteModule& a = *ctx.module;
  switch (kind) {
    case WeightKind::hamming:
      return {hamming_weight(a, x)};
    case WeightKind::swc: {
      std::vector<int> counts(static_cast<size_t>(ctx.orbit.orbit_count), 0);
      for (Elem c : x)
        ++counts[static_cast<size_t>(ctx.orbit.orbit_of[static_cast<size_t>(c)])];
      return counts;
    }
    case WeightKind::aw: {
      std::vector<int> counts(ctx.rho_ideals.size(), 0);
      for (Elem c : x)
        ++counts[static_cast<size_t>(ctx.rho_of[static_cast<size_t>(c)])];
      return counts;
    }
  }
  return {};
}

Json profile_json(const WeightContext& ctx, WeightKind kind, const Word& x) {
  Json out;
  out["kind"] = to_string(kind);
  std::vector<int> counts = profile_counts(ctx, kind, x);
  switch (kind) {
    case WeightKind::hamming:
      out["count"] = counts[0];
      break;
    case WeightKind::swc: {
      Json list = Json::array();
      for (size_t c = 0; c < counts.size(); ++c) {
        if (counts[c] == 0) continue;
        list.push_back(Json{{"n", counts[c]},
                            {"rep", ctx.orbit.representative[c]}});
      }
      out["counts"] = std::move(list);
      break;
    }
    case WeightKind::aw: {
      // order entries by the canonical ideal order rather than class id
      std::vector<size_t> order(counts.size());
      for (size_t c = 0; c < order.size(); ++c) order[c] = c;
      std::sort(order.begin(), order.end(), [&](size_t u, size_t v) {
        return ideal_less(ctx.rho_ideals[u], ctx.rho_ideals[v]);
      });
      Json list = Json::array();
      for (size_t c : order) {
        if (counts[c] == 0) continue;
        list.push_back(Json{{"ideal", ctx.rho_ideals[c].elements},
                            {"n", counts[c]}});
      }
      out["counts"] = std::move(list);
      break;
    }
  }
  return out;
}

bool profile_preserved(const WeightContext& ctx, WeightKind kind,
                       const std::vector<Word>& source,
                       const std::vector<Word>& image) {
  if (source.size() != image.size()) return false;
  for (size_t i = 0; i < source.size(); ++i)
    if (profile_counts(ctx, kind, source[i]) !=
        profile_counts(ctx, kind, image[i]))
      return false;
  return true;
}

}  // namespace epwb
