#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entmat/classify.hpp"
#include "entmat/entmatrix.hpp"
#include "entmat/errors.hpp"
#include "entmat/formulas.hpp"
#include "entmat/geometry.hpp"
#include "entmat/io.hpp"
#include "entmat/verify.hpp"

namespace entmat {

// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 size limit,
// 4 geometric ambiguity.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSizeLimit = 3;
inline constexpr int kExitAmbiguity = 4;

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_output(const std::string& path, const std::string& content,
                         std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << content;
}

inline Graph load_graph_argument(const std::string& arg) {
  std::string text = arg;
  if (arg.empty() || arg.front() != '{') text = read_file(arg);
  return read_graph_json(text);
}

inline std::string default_cache_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("ENTMAT_CACHE")) return env;
  return "";
}

struct CommonOptions {
  std::string backend = "cut-rank";
  std::string format = "json";
  std::string output;
  std::string units = "ebits";
  double tolerance = kCoincidenceTol;
  int jobs = 1;
  std::string cache;
};

inline int run_analyze(const std::string& graph_arg, const CommonOptions& opt,
                       std::ostream& out) {
  Graph g = load_graph_argument(graph_arg);
  EntanglementMatrix e = build_entanglement_matrix(g, backend_from_string(opt.backend),
                                                   opt.tolerance);
  long long total = total_entanglement(e);
  auto attribution = edge_attribution(e, adjacency_matrix(g));
  if (opt.format == "json") {
    json doc = matrix_to_json(e);
    doc["n"] = g.n;
    doc["backend"] = opt.backend;
    doc["total_ebits"] = total;
    doc["units"] = opt.units;
    json attr = json::array();
    for (const auto& [edge, ebits] : attribution)
      attr.push_back(json{{"ebits", ebits}, {"edge", json::array({edge.first, edge.second})}});
    doc["edge_attribution"] = attr;
    write_output(opt.output, doc.dump(2) + "\n", out);
  } else {
    std::ostringstream csv;
    csv << matrix_to_csv(e) << "\ntotal," << total << ',' << opt.units << "\n\nedge,ebits\n";
    for (const auto& [edge, ebits] : attribution)
      csv << edge.first << '-' << edge.second << ',' << ebits << '\n';
    write_output(opt.output, csv.str(), out);
  }
  return kExitOk;
}

inline int run_classify(int n, const CommonOptions& opt, std::ostream& out, std::ostream& err) {
  std::string cache_path = default_cache_path(opt.cache);
  json cache_doc;
  bool cache_valid = false;
  if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
    try {
      cache_doc = json::parse(read_file(cache_path));
      cache_valid = cache_doc.is_object() && cache_doc.value("schema", "") == kCacheSchema &&
                    cache_doc.contains("tables") && cache_doc["tables"].is_object();
    } catch (const json::exception&) {
      cache_valid = false;  // incompatible caches are recomputed, never migrated
    }
  }

  ClassificationTable table;
  std::string key = std::to_string(n);
  if (cache_valid && cache_doc["tables"].contains(key)) {
    table = classification_from_json(cache_doc["tables"][key]);
  } else {
    table = classify(n, backend_from_string(opt.backend), opt.jobs);
    if (!cache_path.empty()) {
      if (!cache_valid) cache_doc = json{{"schema", kCacheSchema}, {"tables", json::object()}};
      cache_doc["tables"][key] = classification_to_json(table);
      std::ofstream cache_out(cache_path, std::ios::binary);
      if (cache_out)
        cache_out << cache_doc.dump(2) << '\n';
      else
        err << "warning: cannot write cache file " << cache_path << '\n';
    }
  }

  if (opt.format == "json") {
    json doc = classification_to_json(table);
    doc["units"] = opt.units;
    write_output(opt.output, doc.dump(2) + "\n", out);
  } else {
    write_output(opt.output, classification_to_csv(table), out);
  }
  return kExitOk;
}

inline int run_maxent(int n_min, int n_max, const CommonOptions& opt,
                      const std::string& series_prefix, const std::string& svg_path,
                      std::ostream& out) {
  std::vector<CompareRow> rows = compare_report(n_min, n_max);

  std::vector<std::pair<int, long long>> odd, even, mult12;
  for (const CompareRow& r : rows) {
    if (r.case_tag == EmaxCase::odd)
      odd.emplace_back(r.n, r.formula);
    else if (r.case_tag == EmaxCase::multiple_of_12)
      mult12.emplace_back(r.n, r.formula);
    else
      even.emplace_back(r.n, r.formula);
  }

  if (opt.format == "json") {
    json doc = report_to_json(rows);
    json series = json::object();
    auto pack = [](const std::vector<std::pair<int, long long>>& s) {
      json arr = json::array();
      for (auto [n, v] : s) arr.push_back(json::array({n, v}));
      return arr;
    };
    series["odd"] = pack(odd);
    series["even"] = pack(even);
    series["multiple-of-12"] = pack(mult12);
    doc["series"] = series;
    doc["units"] = opt.units;
    write_output(opt.output, doc.dump(2) + "\n", out);
  } else {
    write_output(opt.output, report_to_csv(rows), out);
  }

  if (!series_prefix.empty()) {
    write_output(series_prefix + "_odd.csv", series_to_csv(odd), out);
    write_output(series_prefix + "_even.csv", series_to_csv(even), out);
    write_output(series_prefix + "_mult12.csv", series_to_csv(mult12), out);
  }
  if (!svg_path.empty()) {
    std::vector<std::pair<std::string, std::vector<std::pair<int, long long>>>> families;
    if (!odd.empty()) families.emplace_back("odd", odd);
    if (!even.empty()) families.emplace_back("even", even);
    if (!mult12.empty()) families.emplace_back("multiple of 12", mult12);
    write_output(svg_path, svg_line_chart(families), out);
  }
  return kExitOk;
}

inline int run_census(int n, const CommonOptions& opt, std::ostream& out) {
  if (n > kMaxFormulaQubits)
    throw input_error("census supports n <= " + std::to_string(kMaxFormulaQubits) + ", got n=" +
                      std::to_string(n));
  MidpointCensus census = build_midpoint_census(n, opt.tolerance);
  CensusTableRow row = census_table_row(n, opt.tolerance);
  if (opt.format == "json")
    write_output(opt.output, census_to_json(row, census).dump(2) + "\n", out);
  else
    write_output(opt.output, census_to_csv(row, census), out);
  return kExitOk;
}

inline int run_verify(const CommonOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> checks = run_verification(opt.jobs, default_cache_path(opt.cache));
  for (const CheckResult& c : checks)
    err << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
  json summary = verification_to_json(checks);
  write_output(opt.output, summary.dump(2) + "\n", out);
  return summary["all_passed"].get<bool>() ? kExitOk : kExitVerifyFailed;
}

}  // namespace cli_detail

/// Full command-line entry point; returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement matrix analysis for n-qubit graph states"};
  app.name("entmat");
  app.require_subcommand(1);

  cli_detail::CommonOptions opt;
  std::string graph_arg;
  int n = 0, n_min = 0, n_max = 0;
  std::string series_prefix, svg_path;

  auto add_common = [&](CLI::App* cmd, bool backend, bool tol, bool jobs, bool cache) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("-o,--output", opt.output, "Output path (default: stdout)");
    cmd->add_option("--units", opt.units, "Annotate integer values as ebits or log2 multiples")
        ->check(CLI::IsMember({"ebits", "log2"}));
    if (backend)
      cmd->add_option("--backend", opt.backend, "Entropy backend")
          ->check(CLI::IsMember({"cut-rank", "dense-sim"}));
    if (tol) cmd->add_option("--tol", opt.tolerance, "Geometric coincidence tolerance");
    if (jobs)
      cmd->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    if (cache)
      cmd->add_option("--cache", opt.cache,
                      "Classification cache file (also via ENTMAT_CACHE)");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Midpoint labeling, entanglement matrix, total and edge attribution");
  analyze->add_option("graph", graph_arg, "Graph JSON file, or inline {\"n\":...,\"edges\":[...]}")
      ->required();
  add_common(analyze, true, true, false, false);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Non-isomorphic classes ranked by total entanglement");
  classify_cmd->add_option("n", n, "Qubit count (2..7)")->required();
  add_common(classify_cmd, true, false, true, true);

  CLI::App* maxent = app.add_subcommand(
      "maxent", "Closed-form vs constructive maximum entanglement over a range of n");
  maxent->add_option("n_min", n_min, "Range start (>= 2)")->required();
  maxent->add_option("n_max", n_max, "Range end (<= 48; defaults to n_min)");
  maxent->add_option("--series", series_prefix, "Write per-family plot CSVs to PREFIX_*.csv");
  maxent->add_option("--svg", svg_path, "Write a line chart of the families as SVG");
  add_common(maxent, false, false, false, false);

  CLI::App* census_cmd =
      app.add_subcommand("census", "Chord-midpoint census and ring profile of the n-gon");
  census_cmd->add_option("n", n, "Qubit count (2..48)")->required();
  add_common(census_cmd, false, true, false, false);

  CLI::App* verify =
      app.add_subcommand("verify", "Cross-backend, census and formula invariant checks");
  add_common(verify, false, false, true, true);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze) return cli_detail::run_analyze(graph_arg, opt, out);
    if (*classify_cmd) return cli_detail::run_classify(n, opt, out, err);
    if (*maxent) {
      if (maxent->count("n_max") == 0) n_max = n_min;
      return cli_detail::run_maxent(n_min, n_max, opt, series_prefix, svg_path, out);
    }
    if (*census_cmd) return cli_detail::run_census(n, opt, out);
    if (*verify) return cli_detail::run_verify(opt, out, err);
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const size_limit_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const ambiguity_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitAmbiguity;
  }
  return kExitInputError;
}

}  // namespace entmat
