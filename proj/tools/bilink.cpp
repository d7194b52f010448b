/*
 * Copyright 2026 The bilink authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Batch CLI: stats, predict, evaluate, lcpdp, fetch.  Every output embeds
// the tool version, the input checksum, the master seed and the resolved
// result-affecting configuration, so re-running a stamped config
// reproduces the file byte for byte.  Execution-only knobs (--threads,
// --out-dir) are excluded from the stamp: outputs must not depend on them.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bilink/analysis.hpp"
#include "bilink/dataset.hpp"
#include "bilink/eval.hpp"
#include "bilink/graph.hpp"
#include "bilink/local.hpp"
#include "bilink/method.hpp"
#include "bilink/rng.hpp"
#include "bilink/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string input;
  std::string out_dir = ".";
  uint64_t seed = 1;
  int threads = 0;
  std::string config_path;
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Plain "key = value" file, '#' comments.
std::map<std::string, std::string> load_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  if (path.empty()) return kv;
  std::ifstream in(path);
  if (!in) throw bilink::IoError("cannot open config file " + path);
  std::string line;
  uint64_t lineno = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw bilink::ParseError("config entries are 'key = value'", lineno);
    }
    kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return kv;
}

// Flags override config values override defaults.
template <typename T, typename Parse>
void overlay(const std::map<std::string, std::string>& kv,
             const std::string& key, const CLI::Option* opt, T& value,
             Parse parse) {
  if (opt != nullptr && opt->count() > 0) return;  // flag wins
  const auto it = kv.find(key);
  if (it != kv.end()) value = parse(it->second);
}

void overlay_common(const std::map<std::string, std::string>& kv,
                    const CLI::App* cmd, CommonOpts& c) {
  overlay(kv, "input", cmd->get_option_no_throw("--input"), c.input,
          [](const std::string& s) { return s; });
  overlay(kv, "out_dir", cmd->get_option_no_throw("--out-dir"), c.out_dir,
          [](const std::string& s) { return s; });
  overlay(kv, "seed", cmd->get_option_no_throw("--seed"), c.seed,
          [](const std::string& s) { return std::stoull(s); });
  overlay(kv, "threads", cmd->get_option_no_throw("--threads"), c.threads,
          [](const std::string& s) { return std::stoi(s); });
}

json provenance(const std::string& command, const CommonOpts& c,
                const bilink::BipartiteGraph& g, const json& config) {
  char checksum[32];
  std::snprintf(checksum, sizeof(checksum), "%016" PRIx64, g.checksum());
  json j;
  j["tool"] = std::string(bilink::kToolName) + " " + bilink::kVersion;
  j["command"] = command;
  j["input"] = c.input;
  j["input_sha256"] = bilink::sha256_file(c.input);
  j["graph"] = {{"n_left", g.n_left()},
                {"n_right", g.n_right()},
                {"edges", g.edge_count()},
                {"checksum", checksum}};
  j["seed"] = c.seed;
  j["config"] = config;
  return j;
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw bilink::IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

void write_config_echo(const std::string& command, const CommonOpts& c,
                       const json& config, const std::string& stem) {
  json j;
  j["tool"] = std::string(bilink::kToolName) + " " + bilink::kVersion;
  j["command"] = command;
  j["config"] = config;
  write_json(fs::path(c.out_dir) / (stem + "." + command + ".config.json"), j);
}

void csv_provenance_header(std::ostream& out, const json& prov) {
  out << "# tool: " << prov["tool"].get<std::string>() << '\n';
  out << "# command: " << prov["command"].get<std::string>() << '\n';
  out << "# input: " << prov["input"].get<std::string>()
      << " sha256=" << prov["input_sha256"].get<std::string>()
      << " checksum=" << prov["graph"]["checksum"].get<std::string>() << '\n';
  out << "# seed: " << prov["seed"].get<uint64_t>() << '\n';
  out << "# config: " << prov["config"].dump() << '\n';
}

bilink::BipartiteGraph load_graph(const CommonOpts& c) {
  if (c.input.empty()) {
    throw bilink::InvalidArgument("no input dataset given (--input)");
  }
  return bilink::parse_edge_list_file(c.input).graph;
}

std::string input_stem(const CommonOpts& c) {
  return fs::path(c.input).stem().string();
}

std::vector<bilink::Method> parse_method_list(const std::string& csv) {
  std::vector<bilink::Method> methods;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto m = bilink::parse_method(tok);
    if (!m) {
      throw bilink::InvalidArgument("unknown method '" + tok +
                                    "'; valid methods: " +
                                    bilink::known_method_names());
    }
    methods.push_back(*m);
  }
  if (methods.empty()) {
    throw bilink::InvalidArgument("empty method list; valid methods: " +
                                  bilink::known_method_names());
  }
  return methods;
}

json stats_json(const bilink::TopoStats& s) {
  json j;
  j["left_avg_degree"] = s.left_avg_degree;
  j["right_avg_degree"] = s.right_avg_degree;
  j["avg_degree"] = s.avg_degree;
  j["avg_degree_full"] = s.avg_degree_full;
  j["latapy_clustering"] = s.latapy_clustering;
  j["robins_alexander_clustering"] = s.robins_alexander_clustering;
  j["avg_betweenness"] = s.avg_betweenness;
  j["lcp_pearson"] = s.lcp_pearson;
  j["lcp_spearman"] = s.lcp_spearman;
  return j;
}

int cmd_stats(const CommonOpts& c) {
  const auto g = load_graph(c);
  const auto stats = bilink::topo_stats(g, c.threads);
  const json config = {{"input", c.input}, {"seed", c.seed}};
  json j;
  j["provenance"] = provenance("stats", c, g, config);
  j["stats"] = stats_json(stats);
  j["metadata"] = {
      {"avg_degree_convention", "edges / (n_left + n_right)"},
      {"avg_degree_full_convention", "2 * edges / (n_left + n_right)"},
      {"betweenness_normalization",
       "per node: (pair dependencies)/2 / ((n-1)(n-2)/2), n = n_left+n_right; "
       "mean over all nodes"},
      {"latapy_averaging",
       "per-node mean of pairwise overlap with distance-2 same-partition "
       "nodes; averaged over nodes having at least one such neighbour"}};
  fs::create_directories(c.out_dir);
  const std::string stem = input_stem(c);
  write_json(fs::path(c.out_dir) / (stem + ".stats.json"), j);
  write_config_echo("stats", c, config, stem);
  std::cout << (fs::path(c.out_dir) / (stem + ".stats.json")).string() << '\n';
  return 0;
}

int cmd_predict(const CommonOpts& c, const std::string& method_name_arg,
                uint64_t top_k) {
  const auto m = bilink::parse_method(method_name_arg);
  if (!m) {
    throw bilink::InvalidArgument("unknown method '" + method_name_arg +
                                  "'; valid methods: " +
                                  bilink::known_method_names());
  }
  const auto g = load_graph(c);
  const auto pairs = bilink::candidate_pairs(g);
  const bilink::Method methods[] = {*m};
  const auto scores = bilink::score_methods(
      g, pairs, methods, bilink::derive_seed(c.seed, bilink::fnv1a64("random")),
      c.threads);
  const std::vector<uint8_t> flags(pairs.size(), 0);
  const auto ranked = bilink::rank_candidates(
      scores[0], flags,
      bilink::derive_seed(
          c.seed, bilink::fnv1a64(
                      "tie:" + std::string(bilink::method_name(*m)))));

  const json config = {{"input", c.input},
                       {"seed", c.seed},
                       {"method", bilink::method_name(*m)},
                       {"top_k", top_k}};
  const json prov = provenance("predict", c, g, config);
  fs::create_directories(c.out_dir);
  const std::string stem = input_stem(c);
  const fs::path csv_path = fs::path(c.out_dir) / (stem + ".predict.csv");
  std::ofstream out(csv_path, std::ios::trunc);
  if (!out) throw bilink::IoError("cannot write " + csv_path.string());
  csv_provenance_header(out, prov);
  out << "left,right,score\n";
  const uint64_t k = std::min<uint64_t>(top_k, ranked.order.size());
  for (uint64_t r = 0; r < k; ++r) {
    const uint32_t idx = ranked.order[r];
    out << g.left_label(pairs[idx].left) << ','
        << g.right_label(pairs[idx].right) << ',' << fmt_double(scores[0][idx])
        << '\n';
  }
  write_config_echo("predict", c, config, stem);
  std::cout << csv_path.string() << '\n';
  return 0;
}

int cmd_evaluate(const CommonOpts& c, const std::string& methods_csv,
                 double fraction, uint32_t reps) {
  const auto methods = parse_method_list(methods_csv);
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw bilink::InvalidArgument("--fraction must lie strictly in (0,1)");
  }
  if (reps == 0) throw bilink::InvalidArgument("--reps must be positive");
  const auto g = load_graph(c);
  const std::string stem = input_stem(c);
  const auto result = bilink::run_experiment(g, methods, fraction, reps,
                                             c.seed, c.threads, stem);

  std::string methods_joined;
  for (const auto m : methods) {
    if (!methods_joined.empty()) methods_joined += ",";
    methods_joined += bilink::method_name(m);
  }
  const json config = {{"input", c.input},          {"seed", c.seed},
                       {"methods", methods_joined}, {"fraction", fraction},
                       {"reps", reps}};
  const json prov = provenance("evaluate", c, g, config);
  fs::create_directories(c.out_dir);

  const fs::path csv_path = fs::path(c.out_dir) / (stem + ".evaluate.csv");
  {
    std::ofstream out(csv_path, std::ios::trunc);
    if (!out) throw bilink::IoError("cannot write " + csv_path.string());
    csv_provenance_header(out, prov);
    out << "method,repetition,precision,aupr\n";
    for (const auto& ms : result.methods) {
      for (uint32_t rep = 0; rep < reps; ++rep) {
        out << bilink::method_name(ms.method) << ',' << rep << ','
            << fmt_double(ms.precision[rep]) << ',' << fmt_double(ms.aupr[rep])
            << '\n';
      }
    }
  }

  json summary;
  summary["provenance"] = prov;
  summary["protocol"] = {{"fraction", fraction},
                         {"repetitions", reps},
                         {"removed_per_rep", result.removed_per_rep},
                         {"candidates_per_rep", result.candidates_per_rep}};
  summary["methods"] = json::array();
  for (const auto& ms : result.methods) {
    summary["methods"].push_back(
        {{"name", bilink::method_name(ms.method)},
         {"class", bilink::method_class_name(bilink::method_class(ms.method))},
         {"precision",
          {{"mean", ms.precision_stats.mean}, {"se", ms.precision_stats.se}}},
         {"aupr", {{"mean", ms.aupr_stats.mean}, {"se", ms.aupr_stats.se}}}});
  }
  summary["comparisons"] = json::array();
  for (const auto& cmp : result.comparisons) {
    summary["comparisons"].push_back(
        {{"a", bilink::method_name(cmp.lhs)},
         {"b", bilink::method_name(cmp.rhs)},
         {"precision",
          {{"u", cmp.precision_u},
           {"p", cmp.precision_p},
           {"p_adj", cmp.precision_p_adj}}},
         {"aupr",
          {{"u", cmp.aupr_u}, {"p", cmp.aupr_p}, {"p_adj", cmp.aupr_p_adj}}}});
  }
  summary["classes"] = json::array();
  const std::vector<bilink::ExperimentResult> results = {result};
  for (const auto& agg : bilink::aggregate_classes(results)) {
    summary["classes"].push_back(
        {{"name", bilink::method_class_name(agg.klass)},
         {"samples", agg.samples},
         {"precision",
          {{"mean", agg.precision_stats.mean},
           {"se", agg.precision_stats.se}}},
         {"aupr",
          {{"mean", agg.aupr_stats.mean}, {"se", agg.aupr_stats.se}}}});
  }
  write_json(fs::path(c.out_dir) / (stem + ".summary.json"), summary);
  write_config_echo("evaluate", c, config, stem);
  std::cout << csv_path.string() << '\n'
            << (fs::path(c.out_dir) / (stem + ".summary.json")).string()
            << '\n';
  return 0;
}

int cmd_lcpdp(const CommonOpts& c) {
  const auto g = load_graph(c);
  const auto points = bilink::lcp_decomposition(g, c.threads);
  const auto corr = bilink::lcp_correlation(points);
  const json config = {{"input", c.input}, {"seed", c.seed}};
  const json prov = provenance("lcpdp", c, g, config);
  fs::create_directories(c.out_dir);
  const std::string stem = input_stem(c);

  const fs::path csv_path = fs::path(c.out_dir) / (stem + ".lcpdp.csv");
  {
    std::ofstream out(csv_path, std::ios::trunc);
    if (!out) throw bilink::IoError("cannot write " + csv_path.string());
    csv_provenance_header(out, prov);
    out << "left,right,cn,lcl\n";
    for (const auto& pt : points) {
      out << g.left_label(pt.edge.left) << ',' << g.right_label(pt.edge.right)
          << ',' << pt.cn << ',' << pt.lcl << '\n';
    }
  }
  json j;
  j["provenance"] = prov;
  j["pearson"] = corr.pearson;
  j["spearman"] = corr.spearman;
  j["points"] = corr.points;
  write_json(fs::path(c.out_dir) / (stem + ".lcpcorr.json"), j);
  write_config_echo("lcpdp", c, config, stem);
  std::cout << csv_path.string() << '\n';
  return 0;
}

int cmd_fetch(const std::string& name, const std::string& out_dir,
              const std::string& from_file) {
  const auto path = bilink::fetch_dataset(
      name, out_dir, from_file.empty() ? fs::path() : fs::path(from_file));
  std::cout << path.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite link prediction toolkit"};
  app.set_version_flag("--version",
                       std::string(bilink::kToolName) + " " + bilink::kVersion);
  app.require_subcommand(1);

  CommonOpts common;
  auto add_common = [&common](CLI::App* cmd) {
    cmd->add_option("--input,-i", common.input,
                    "edge-list dataset (canonical TSV)");
    cmd->add_option("--out-dir,-o", common.out_dir, "output directory");
    cmd->add_option("--seed,-s", common.seed, "master seed");
    cmd->add_option("--threads,-t", common.threads,
                    "worker threads (0 = all cores)");
    cmd->add_option("--config", common.config_path,
                    "key = value config file (flags override)");
  };

  auto* stats = app.add_subcommand("stats", "topological statistics JSON");
  add_common(stats);

  auto* predict =
      app.add_subcommand("predict", "rank non-observed pairs for one method");
  add_common(predict);
  std::string method = "cra";
  uint64_t top_k = 100;
  predict->add_option("--method,-m", method, "prediction method");
  predict->add_option("--top-k,-k", top_k, "rows to emit");

  auto* evaluate = app.add_subcommand(
      "evaluate", "removal/precision/AUPR protocol with statistics");
  add_common(evaluate);
  std::string methods_csv = "cra,cn,nbi,random";
  double fraction = 0.1;
  uint32_t reps = 100;
  evaluate->add_option("--methods,-m", methods_csv,
                       "comma-separated method list");
  evaluate->add_option("--fraction,-f", fraction,
                       "fraction of edges to remove per repetition");
  evaluate->add_option("--reps,-r", reps, "number of repetitions");

  auto* lcpdp = app.add_subcommand(
      "lcpdp", "per-edge (CN, LCL) decomposition and correlation");
  add_common(lcpdp);

  auto* fetch = app.add_subcommand("fetch", "download or import a dataset");
  std::string fetch_name;
  std::string fetch_dir = "data";
  std::string from_file;
  fetch->add_option("name", fetch_name, "registered dataset name")->required();
  fetch->add_option("--out-dir,-o", fetch_dir, "dataset directory");
  fetch
      ->add_option("--from-file", from_file,
                   "convert a locally obtained raw file instead of "
                   "downloading")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    const auto kv = load_config(common.config_path);
    overlay_common(kv, cmd, common);
    if (cmd == stats) return cmd_stats(common);
    if (cmd == predict) {
      overlay(kv, "method", cmd->get_option_no_throw("--method"), method,
              [](const std::string& s) { return s; });
      overlay(kv, "top_k", cmd->get_option_no_throw("--top-k"), top_k,
              [](const std::string& s) { return std::stoull(s); });
      return cmd_predict(common, method, top_k);
    }
    if (cmd == evaluate) {
      overlay(kv, "methods", cmd->get_option_no_throw("--methods"),
              methods_csv, [](const std::string& s) { return s; });
      overlay(kv, "fraction", cmd->get_option_no_throw("--fraction"), fraction,
              [](const std::string& s) { return std::stod(s); });
      overlay(kv, "reps", cmd->get_option_no_throw("--reps"), reps,
              [](const std::string& s) {
                return static_cast<uint32_t>(std::stoul(s));
              });
      return cmd_evaluate(common, methods_csv, fraction, reps);
    }
    if (cmd == lcpdp) return cmd_lcpdp(common);
    if (cmd == fetch) return cmd_fetch(fetch_name, fetch_dir, from_file);
    throw bilink::Error("unreachable subcommand");
  } catch (const bilink::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
