#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "entmat/classify.hpp"
#include "entmat/entmatrix.hpp"
#include "entmat/formulas.hpp"
#include "entmat/geometry.hpp"
#include "entmat/graph.hpp"
#include "entmat/io.hpp"
#include "entmat/parallel.hpp"
#include "entmat/statevector.hpp"

namespace entmat {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

inline constexpr const char* kCacheSchema = "entmat.classify.v1";

namespace detail {

inline Graph random_graph(int n, std::mt19937& rng) {
  std::vector<std::pair<int, int>> edges;
  std::bernoulli_distribution coin(0.5);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return make_graph(n, edges);
}

inline std::vector<int> random_cut(int n, std::mt19937& rng) {
  std::vector<int> part;
  while (part.empty() || static_cast<int>(part.size()) == n) {
    part.clear();
    std::bernoulli_distribution coin(0.5);
    for (int v = 1; v <= n; ++v)
      if (coin(rng)) part.push_back(v);
  }
  return part;
}

}  // namespace detail

/// Dense-simulation entropy equals the GF(2) cut rank on random
/// (graph, bipartition) pairs, within 1e-9.
inline CheckResult check_oracle_equivalence(int jobs, int samples = 200) {
  std::mt19937 rng(0x5eed0001u);
  struct Item {
    Graph g;
    std::vector<int> cut;
  };
  std::vector<Item> items;
  std::uniform_int_distribution<int> size_dist(2, 10);
  for (int i = 0; i < samples; ++i) {
    int n = size_dist(rng);
    Item item{detail::random_graph(n, rng), {}};
    item.cut = detail::random_cut(n, rng);
    items.push_back(std::move(item));
  }
  auto deltas = parallel_map<double>(items.size(), jobs, [&](std::size_t i) {
    double sim = von_neumann_entropy(
        reduced_spectrum(graph_state_vector(items[i].g), items[i].cut));
    double rank = static_cast<double>(entropy_cut_rank(items[i].g, items[i].cut));
    return std::abs(sim - rank);
  });
  double worst = 0;
  for (double d : deltas) worst = std::max(worst, d);
  CheckResult r{"oracle-equivalence", worst <= 1e-9,
                std::to_string(samples) + " random cuts, max |dense-sim - cut-rank| = " +
                    format_double(worst)};
  return r;
}

/// Both backends produce identical entanglement matrices.
inline CheckResult check_backend_agreement(int jobs, int samples = 60) {
  std::mt19937 rng(0x5eed0002u);
  std::vector<Graph> graphs;
  std::uniform_int_distribution<int> size_dist(2, 8);
  for (int i = 0; i < samples; ++i) graphs.push_back(detail::random_graph(size_dist(rng), rng));
  auto ok = parallel_map<char>(graphs.size(), jobs, [&](std::size_t i) {
    EntanglementMatrix a = build_entanglement_matrix(graphs[i], Backend::cut_rank);
    EntanglementMatrix b = build_entanglement_matrix(graphs[i], Backend::dense_sim);
    return static_cast<char>(a.entries == b.entries);
  });
  int failures = 0;
  for (char c : ok)
    if (!c) ++failures;
  return {"matrix-backend-agreement", failures == 0,
          std::to_string(samples) + " random graphs, " + std::to_string(failures) +
              " disagreements"};
}

/// Complete-census structure for n <= 30: counts, center, primary degrees,
/// plus tolerance robustness under x10 and /10 scaling.
inline CheckResult check_census_invariants(int jobs, int n_max = 30) {
  auto problems = parallel_map<std::string>(
      static_cast<std::size_t>(n_max - 1), jobs, [&](std::size_t idx) -> std::string {
        int n = static_cast<int>(idx) + 2;
        MidpointCensus census = build_midpoint_census(n);
        long long count = static_cast<long long>(census.records.size());
        long long expected = n % 2 == 0 ? static_cast<long long>(n) * (n / 2 - 1) + 1
                                        : static_cast<long long>(n) * (n - 1) / 2;
        if (count != expected)
          return "n=" + std::to_string(n) + ": " + std::to_string(count) + " records, expected " +
                 std::to_string(expected);
        int centers = 0;
        for (const MidpointRecord& rec : census.records) {
          if (rec.kind == MidpointKind::center) {
            ++centers;
            if (rec.degree != n)
              return "n=" + std::to_string(n) + ": center degree " + std::to_string(rec.degree);
          }
          bool primary_generator = false;
          for (const Chord& c : rec.generators) primary_generator |= c.separation == 1;
          if (primary_generator && rec.degree != 2)
            return "n=" + std::to_string(n) + ": primary midpoint of degree " +
                   std::to_string(rec.degree) + " at chord (" +
                   std::to_string(rec.generators.front().a) + "," +
                   std::to_string(rec.generators.front().b) + ")";
          if (n % 2 == 1 && rec.degree != 2)
            return "n=" + std::to_string(n) + ": odd census degree " +
                   std::to_string(rec.degree);
        }
        if (n % 2 == 0 && centers != 1)
          return "n=" + std::to_string(n) + ": " + std::to_string(centers) + " center records";
        if (n % 2 == 1 && centers != 0)
          return "n=" + std::to_string(n) + ": unexpected center record";
        for (const Ring& ring : census.rings)
          if (ring.radius > census.tolerance &&
              static_cast<int>(ring.members.size()) != n && n % 2 == 0)
            return "n=" + std::to_string(n) + ": ring of size " +
                   std::to_string(ring.members.size());
        // Tolerance robustness: the degree multiset must not move.
        auto degrees_of = [](const MidpointCensus& c) {
          std::map<int, int> hist;
          for (const MidpointRecord& rec : c.records) hist[rec.degree]++;
          return hist;
        };
        auto base = degrees_of(census);
        if (degrees_of(build_midpoint_census(n, kCoincidenceTol * 10)) != base ||
            degrees_of(build_midpoint_census(n, kCoincidenceTol / 10)) != base)
          return "n=" + std::to_string(n) + ": degree multiset changed under tolerance scaling";
        return "";
      });
  for (const std::string& p : problems)
    if (!p.empty()) return {"census-invariants", false, p};
  return {"census-invariants", true, "n in [2," + std::to_string(n_max) + "] all invariants hold"};
}

/// Constructive totals match the closed form away from the degenerate n=2
/// wrap case; multiple-of-12 rows are recorded, not asserted.
inline CheckResult check_formula_constructive(int jobs, int n_max = kMaxFormulaQubits) {
  auto rows = parallel_map<CompareRow>(
      static_cast<std::size_t>(n_max - 2), jobs, [&](std::size_t idx) {
        int n = static_cast<int>(idx) + 3;
        MaxEntBreakdown b = emax_constructive(n);
        return CompareRow{n, b.case_tag, b.formula_total, b.constructive_total, b.match};
      });
  std::string recorded;
  for (const CompareRow& r : rows) {
    if (r.case_tag == EmaxCase::multiple_of_12) {
      recorded += " n=" + std::to_string(r.n) + (r.match ? " matches" : " differs:") +
                  (r.match ? "" : " constructive=" + std::to_string(r.constructive));
      continue;
    }
    if (!r.match)
      return {"formula-constructive", false,
              "n=" + std::to_string(r.n) + ": formula " + std::to_string(r.formula) +
                  " vs constructive " + std::to_string(r.constructive)};
  }
  return {"formula-constructive", true,
          "n in [3," + std::to_string(n_max) + "] match; multiples of 12 recorded:" + recorded};
}

/// Validates a classification cache file against recomputation. Skipped
/// silently when no cache is configured.
inline CheckResult check_classify_cache(const std::string& cache_path, int jobs) {
  CheckResult r{"classify-cache", true, "cache at " + cache_path};
  std::ifstream in(cache_path);
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::exception& ex) {
    return {"classify-cache", false, std::string("cache is not valid JSON: ") + ex.what()};
  }
  if (!doc.is_object() || doc.value("schema", "") != kCacheSchema)
    return {"classify-cache", false, "cache schema mismatch (expected " +
                                         std::string(kCacheSchema) + ")"};
  if (!doc.contains("tables") || !doc["tables"].is_object())
    return {"classify-cache", false, "cache has no tables object"};
  for (const auto& [key, value] : doc["tables"].items()) {
    int n = 0;
    try {
      n = static_cast<int>(parse_int(key));
      ClassificationTable cached = classification_from_json(value);
      long long sum = 0;
      for (const ClassRecord& rec : cached.rows) sum += rec.labeled_count;
      long long expected = 1ll << (n * (n - 1) / 2);
      if (sum != expected)
        return {"classify-cache", false,
                "cached n=" + key + " labeled counts sum to " + std::to_string(sum) +
                    ", expected " + std::to_string(expected)};
      if (n <= 6) {
        ClassificationTable fresh = classify(n, Backend::cut_rank, jobs);
        if (classification_to_json(fresh) != classification_to_json(cached))
          return {"classify-cache", false, "cached n=" + key + " disagrees with recomputation"};
      }
    } catch (const std::exception& ex) {
      return {"classify-cache", false, "cached n=" + key + " is corrupt: " + ex.what()};
    }
  }
  return r;
}

inline std::vector<CheckResult> run_verification(int jobs, const std::string& cache_path = "") {
  std::vector<CheckResult> checks;
  checks.push_back(check_oracle_equivalence(jobs));
  checks.push_back(check_backend_agreement(jobs));
  checks.push_back(check_census_invariants(jobs));
  checks.push_back(check_formula_constructive(jobs));
  if (!cache_path.empty() && std::filesystem::exists(cache_path))
    checks.push_back(check_classify_cache(cache_path, jobs));
  return checks;
}

inline json verification_to_json(const std::vector<CheckResult>& checks) {
  bool all = true;
  json arr = json::array();
  for (const CheckResult& c : checks) {
    all = all && c.passed;
    arr.push_back(json{{"detail", c.detail}, {"name", c.name}, {"passed", c.passed}});
  }
  return json{{"all_passed", all}, {"checks", arr}};
}

}  // namespace entmat
