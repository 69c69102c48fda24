#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "entmat/errors.hpp"
#include "entmat/geometry.hpp"
#include "entmat/graph.hpp"
#include "entmat/statevector.hpp"

namespace entmat {

enum class Backend { cut_rank, dense_sim };

inline std::string to_string(Backend b) {
  return b == Backend::cut_rank ? "cut-rank" : "dense-sim";
}

inline Backend backend_from_string(const std::string& s) {
  if (s == "cut-rank") return Backend::cut_rank;
  if (s == "dense-sim") return Backend::dense_sim;
  throw input_error("unknown backend '" + s + "' (expected cut-rank or dense-sim)");
}

struct MidpointLabel {
  int index = 0;  // 0-based matrix index; printed as "1'", "2'", ...
  bool primary = false;
  Point2 position;
  std::vector<Chord> generators;       // present edges whose midpoint sits here
  std::vector<Chord> incident_chords;  // present edges passing through here
  int multiplicity = 0;                // |incident_chords|
};

/// Midpoint labels of a graph: primary 1'..n' (k' between qubits k and k+1,
/// wrapping n to 1, present or not), then one secondary label per distinct
/// midpoint of a present non-adjacent edge, in ascending (smaller endpoint,
/// larger endpoint) scan order with coincident positions sharing a label.
struct MidpointLabeling {
  int n = 0;
  std::vector<MidpointLabel> labels;  // first n entries are the primary labels

  int size() const { return static_cast<int>(labels.size()); }
};

inline std::string label_name(int index) { return std::to_string(index + 1) + "'"; }

inline MidpointLabeling label_midpoints(const Graph& g, double tol = kCoincidenceTol) {
  if (g.n < 2) throw input_error("midpoint labeling needs n >= 2, got n=" + std::to_string(g.n));
  MidpointLabeling out;
  out.n = g.n;

  std::vector<Chord> present;
  present.reserve(g.edges.size());
  for (auto [a, b] : g.edges) present.push_back(make_chord(g.n, a, b));

  for (int k = 1; k <= g.n; ++k) {
    MidpointLabel lab;
    lab.index = k - 1;
    lab.primary = true;
    if (g.n == 2) {
      // Both wrap midpoints of the single chord collapse to the origin; by
      // convention 1' keeps the chord midpoint and 2' sits on the opposite
      // arc, so the edge's diagonal unit is counted once.
      lab.position = k == 1 ? Point2{0.0, 0.0} : Point2{0.0, -1.0};
    } else {
      lab.position = chord_midpoint(g.n, make_chord(g.n, k, k % g.n + 1));
    }
    out.labels.push_back(std::move(lab));
  }
  for (const Chord& c : present) {
    if (c.separation == 1) continue;
    Point2 p = chord_midpoint(g.n, c);
    bool merged = false;
    for (std::size_t i = static_cast<std::size_t>(g.n); i < out.labels.size(); ++i)
      if (distance(out.labels[i].position, p) <= tol) {
        merged = true;
        break;
      }
    if (!merged) {
      MidpointLabel lab;
      lab.index = static_cast<int>(out.labels.size());
      lab.position = p;
      out.labels.push_back(std::move(lab));
    }
  }
  for (MidpointLabel& lab : out.labels) {
    for (const Chord& c : present) {
      if (point_on_chord(lab.position, c, g.n, tol)) lab.incident_chords.push_back(c);
      if (distance(chord_midpoint(g.n, c), lab.position) <= tol) lab.generators.push_back(c);
    }
    lab.multiplicity = static_cast<int>(lab.incident_chords.size());
  }
  return out;
}

/// Arc bipartition generated by joining primary midpoints i' and j':
/// part A = {i+1, ..., j} walking the ring, part B = the rest.
inline std::pair<std::vector<int>, std::vector<int>> bipartition_from_primary_pair(int n, int i,
                                                                                   int j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw input_error("primary label out of range for n=" + std::to_string(n));
  if (i == j) throw input_error("bipartition needs two distinct primary midpoints");
  std::vector<int> part_a;
  for (int k = i % n + 1;; k = k % n + 1) {
    part_a.push_back(k);
    if (k == j) break;
  }
  std::vector<int> part_b;
  std::vector<bool> in_a(static_cast<std::size_t>(n) + 1, false);
  for (int v : part_a) in_a[static_cast<std::size_t>(v)] = true;
  for (int v = 1; v <= n; ++v)
    if (!in_a[static_cast<std::size_t>(v)]) part_b.push_back(v);
  return {std::move(part_a), std::move(part_b)};
}

/// Symmetric integer matrix over midpoint labels, entries in ebits.
struct EntanglementMatrix {
  MidpointLabeling labeling;
  std::vector<long long> entries;  // row-major, size() x size()

  int size() const { return labeling.size(); }
  long long at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(size()) +
                   static_cast<std::size_t>(c)];
  }
  long long& at(int r, int c) {
    return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(size()) +
                   static_cast<std::size_t>(c)];
  }
};

inline EntanglementMatrix build_entanglement_matrix(const Graph& g,
                                                    Backend backend = Backend::cut_rank,
                                                    double tol = kCoincidenceTol) {
  EntanglementMatrix e;
  e.labeling = label_midpoints(g, tol);
  int m = e.labeling.size();
  e.entries.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);

  StateVector state;
  if (backend == Backend::dense_sim) state = graph_state_vector(g);  // enforces n <= 14
  auto cut_entropy = [&](const std::vector<int>& part_a) -> long long {
    if (backend == Backend::cut_rank) return entropy_cut_rank(g, part_a);
    double h = von_neumann_entropy(reduced_spectrum(state, part_a));
    long long rounded = std::llround(h);
    if (std::abs(h - static_cast<double>(rounded)) > 1e-6)
      throw std::logic_error("dense-sim entropy is not an integer ebit count: " +
                             std::to_string(h));
    return rounded;
  };

  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j) {
      long long v = cut_entropy(bipartition_from_primary_pair(g.n, i, j).first);
      e.at(i - 1, j - 1) = e.at(j - 1, i - 1) = v;
    }
  for (const MidpointLabel& lab : e.labeling.labels) {
    if (lab.primary) {
      // The value is 1 for a present consecutive edge regardless of degree;
      // primary midpoints are degree 2 at every tested n anyway.
      bool present = !lab.generators.empty();
      e.at(lab.index, lab.index) = present ? 1 : 0;
    } else {
      e.at(lab.index, lab.index) = lab.multiplicity;
    }
  }
  return e;
}

/// Diagonal plus strictly-upper-triangular sum, in ebits.
inline long long total_entanglement(const EntanglementMatrix& e) {
  long long total = 0;
  for (int i = 0; i < e.size(); ++i)
    for (int j = i; j < e.size(); ++j) total += e.at(i, j);
  return total;
}

/// Splits every diagonal entry into unit contributions, one per incident
/// present edge (adjacency-confirmed). An edge crossing several labeled
/// midpoints collects one unit at each; the per-edge totals always sum back
/// to the diagonal.
inline std::map<std::pair<int, int>, long long> edge_attribution(const EntanglementMatrix& e,
                                                                 const BitMatrix& a) {
  std::map<std::pair<int, int>, long long> attribution;
  long long units = 0;
  for (const MidpointLabel& lab : e.labeling.labels) {
    long long diag = e.at(lab.index, lab.index);
    if (lab.primary) {
      if (diag == 0) continue;
      if (diag != 1 || lab.generators.empty())
        throw std::logic_error("primary diagonal inconsistent at label " +
                               label_name(lab.index));
      const Chord& c = lab.generators.front();
      if (!a.at(c.a - 1, c.b - 1))
        throw std::logic_error("adjacency matrix disagrees with edge (" + std::to_string(c.a) +
                               "," + std::to_string(c.b) + ")");
      attribution[{c.a, c.b}] += 1;
      units += 1;
    } else {
      if (diag != static_cast<long long>(lab.incident_chords.size()))
        throw std::logic_error("secondary diagonal disagrees with incident chords at label " +
                               label_name(lab.index));
      for (const Chord& c : lab.incident_chords) {
        if (!a.at(c.a - 1, c.b - 1))
          throw std::logic_error("adjacency matrix disagrees with edge (" + std::to_string(c.a) +
                                 "," + std::to_string(c.b) + ")");
        attribution[{c.a, c.b}] += 1;
        units += 1;
      }
    }
  }
  long long diag_sum = 0;
  for (int i = 0; i < e.size(); ++i) diag_sum += e.at(i, i);
  if (units != diag_sum)
    throw std::logic_error("edge attribution totals disagree with the diagonal");
  return attribution;
}

}  // namespace entmat
