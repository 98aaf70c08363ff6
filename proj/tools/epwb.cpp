// epwb: verification workbench for extension properties of linear codes over
// finite module alphabets.
//
// Exit codes: 0 verdict agrees with the structural prediction (or there is
// nothing to contradict), 1 internal inconsistency (a verdict the theory
// rules out), 2 inconclusive (bounds or budget too small), 3 bad input or
// I/O failure.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "epwb/scenario.hpp"

namespace {

using epwb::Json;

// A spec argument is inline JSON or a path to a JSON file.
Json load_spec(const std::string& arg) {
  try {
    return Json::parse(arg);
  } catch (const Json::parse_error&) {
  }
  std::ifstream in(arg);
  if (!in) throw epwb::SpecError("cannot open spec file: " + arg);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const std::exception& e) {
    throw epwb::SpecError("cannot parse spec file " + arg + ": " + e.what());
  }
}

struct CommonArgs {
  std::string ring;
  std::string module;
  std::string group;
  std::string weight;
  std::string scenario_file;
  std::string out;
  std::string format = "json";
  int n_from = -1;
  int n_max = -1;
  int gen_max = -1;
  int jobs = 1;
  long long budget_pairs = -1;
  long long word_bound = -1;
  long long table_limit = -1;
};

void add_spec_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--ring", args.ring, "ring spec (inline JSON or file)");
  cmd->add_option("--module", args.module, "module spec (inline JSON or file)");
  cmd->add_option("--scenario", args.scenario_file, "scenario JSON file");
}

void add_output_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--out", args.out, "write the report to this file");
  cmd->add_option("--format", args.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

void add_search_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--group", args.group,
                  "symmetry group: full-aut, trivial, or image arrays");
  cmd->add_option("--weight", args.weight, "weight: hamming, swc, or aw")
      ->check(CLI::IsMember({"hamming", "swc", "aw"}));
  cmd->add_option("--n-from", args.n_from, "first code length");
  cmd->add_option("--n-max", args.n_max, "last code length");
  cmd->add_option("--gen-max", args.gen_max, "max generators per code");
  cmd->add_option("--jobs", args.jobs, "worker threads");
  cmd->add_option("--budget-pairs", args.budget_pairs,
                  "max code pairs scanned (0 = unlimited)");
  cmd->add_option("--word-bound", args.word_bound, "max codewords per span");
  cmd->add_option("--table-limit", args.table_limit,
                  "max codewords for isomorphism search");
}

epwb::Scenario build_scenario(const CommonArgs& args, const std::string& mode) {
  Json base = Json::object();
  if (!args.scenario_file.empty()) {
    std::ifstream in(args.scenario_file);
    if (!in)
      throw epwb::SpecError("cannot open scenario file: " + args.scenario_file);
    try {
      in >> base;
    } catch (const std::exception& e) {
      throw epwb::SpecError("cannot parse scenario file " +
                            args.scenario_file + ": " + e.what());
    }
  }
  if (!args.ring.empty()) base["ring"] = load_spec(args.ring);
  if (!args.module.empty()) base["module"] = load_spec(args.module);
  if (!args.group.empty()) {
    if (args.group == "full-aut" || args.group == "trivial")
      base["group"] = args.group;
    else
      base["group"] = load_spec(args.group);
  }
  if (!args.weight.empty()) base["weight"] = args.weight;
  if (args.n_from >= 0) base["n_from"] = args.n_from;
  if (args.n_max >= 0) base["n_max"] = args.n_max;
  if (args.gen_max >= 0) base["gen_max"] = args.gen_max;
  if (args.budget_pairs >= 0) base["budget_pairs"] = args.budget_pairs;
  if (args.word_bound >= 0) base["word_bound"] = args.word_bound;
  if (args.table_limit >= 0) base["table_limit"] = args.table_limit;
  base["mode"] = mode;

  epwb::Scenario s = epwb::scenario_from_json(base);
  s.jobs = args.jobs;
  return s;
}

int emit(const epwb::RunResult& result, const CommonArgs& args) {
  std::string body = args.format == "text"
                         ? epwb::render_text(result.report)
                         : result.report.dump() + "\n";
  if (args.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(args.out, std::ios::trunc);
    if (!out) throw epwb::SpecError("cannot write report to " + args.out);
    out << body;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extension property workbench for codes over module alphabets"};
  app.require_subcommand(1);

  CommonArgs args;

  CLI::App* ring = app.add_subcommand("ring", "ring structure reports");
  CLI::App* ring_info = ring->add_subcommand("info", "ideal lattice and class");
  add_spec_flags(ring_info, args);
  add_output_flags(ring_info, args);

  CLI::App* module_cmd = app.add_subcommand("module", "module structure reports");
  CLI::App* module_info =
      module_cmd->add_subcommand("info", "submodules, socle, symmetries");
  add_spec_flags(module_info, args);
  add_output_flags(module_info, args);

  CLI::App* classify =
      app.add_subcommand("classify", "predict the extension property");
  add_spec_flags(classify, args);
  add_output_flags(classify, args);

  CLI::App* ep = app.add_subcommand("ep", "extension property scans");
  CLI::App* ep_verify =
      ep->add_subcommand("verify", "check every preserving isomorphism extends");
  CLI::App* ep_search =
      ep->add_subcommand("search", "look for a non-extendable isomorphism");
  CLI::App* ep_certify =
      ep->add_subcommand("certify", "peel certificates for Hamming isometries");
  for (CLI::App* cmd : {ep_verify, ep_search, ep_certify}) {
    add_spec_flags(cmd, args);
    add_output_flags(cmd, args);
    add_search_flags(cmd, args);
  }

  CLI::App* cache_cmd = app.add_subcommand("cache", "cache maintenance");
  CLI::App* cache_clear = cache_cmd->add_subcommand("clear", "drop all entries");
  add_output_flags(cache_clear, args);

  CLI11_PARSE(app, argc, argv);

  try {
    epwb::Cache cache = epwb::Cache::from_env();
    if (ring_info->parsed()) {
      if (args.ring.empty()) throw epwb::SpecError("ring info needs --ring");
      return emit(epwb::run_ring_info(load_spec(args.ring), cache), args);
    }
    if (module_info->parsed()) {
      if (args.ring.empty() || args.module.empty())
        throw epwb::SpecError("module info needs --ring and --module");
      return emit(epwb::run_module_info(load_spec(args.ring),
                                        load_spec(args.module), cache),
                  args);
    }
    if (classify->parsed()) {
      if (args.ring.empty() || args.module.empty())
        throw epwb::SpecError("classify needs --ring and --module");
      return emit(epwb::run_classify(load_spec(args.ring),
                                     load_spec(args.module), cache),
                  args);
    }
    if (ep_verify->parsed())
      return emit(epwb::run_ep(build_scenario(args, "verify"), cache), args);
    if (ep_search->parsed())
      return emit(epwb::run_ep(build_scenario(args, "search"), cache), args);
    if (ep_certify->parsed())
      return emit(epwb::run_ep(build_scenario(args, "certify"), cache), args);
    if (cache_clear->parsed()) {
      size_t removed = cache.clear();
      return emit(epwb::RunResult{Json{{"removed", removed}}, 0}, args);
    }
    std::cerr << "epwb: no command selected\n";
    return 3;
  } catch (const epwb::InternalInconsistency& e) {
    std::cerr << "epwb: internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const epwb::ResourceError& e) {
    std::cerr << "epwb: inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const epwb::SpecError& e) {
    std::cerr << "epwb: error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "epwb: error: " << e.what() << "\n";
    return 3;
  }
}
