#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "entmat/cli.hpp"
#include "entmat/graph.hpp"

namespace testutil {

inline entmat::Graph worked_example4() {
  return entmat::make_graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}});
}

inline entmat::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
  return entmat::make_graph(n, edges);
}

inline entmat::Graph random_graph(int n, std::mt19937& rng) {
  std::vector<std::pair<int, int>> edges;
  std::bernoulli_distribution coin(0.5);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return entmat::make_graph(n, edges);
}

inline std::vector<int> random_proper_cut(int n, std::mt19937& rng) {
  std::vector<int> part;
  std::bernoulli_distribution coin(0.5);
  while (part.empty() || static_cast<int>(part.size()) == n) {
    part.clear();
    for (int v = 1; v <= n; ++v)
      if (coin(rng)) part.push_back(v);
  }
  return part;
}

/// Relabels a graph: vertex v becomes perm[v-1].
inline entmat::Graph relabel(const entmat::Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges) edges.emplace_back(perm[a - 1], perm[b - 1]);
  return entmat::make_graph(g.n, edges);
}

inline std::vector<int> rotation_perm(int n, int shift) {
  std::vector<int> perm(n);
  for (int v = 1; v <= n; ++v) perm[v - 1] = (v - 1 + shift) % n + 1;
  return perm;
}

inline std::vector<int> reflection_perm(int n) {
  std::vector<int> perm(n);
  for (int v = 1; v <= n; ++v) perm[v - 1] = (n + 1 - v) % n + 1;
  return perm;
}

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path = std::filesystem::temp_directory_path() /
           ("entmat_test_" + std::to_string(rng()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = entmat::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace testutil
