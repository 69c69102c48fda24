#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "entmat/errors.hpp"
#include "entmat/parallel.hpp"

namespace entmat {

/// Labeled simple undirected graph on vertices 1..n. Adjacency is mirrored
/// into per-vertex bitmasks, which caps n at 64 (well past the desk scale
/// of n <= 48 used anywhere in this library).
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized a < b, sorted
  std::vector<std::uint64_t> adj;          // adj[i-1] bit (j-1) set iff edge {i,j}

  bool has_edge(int i, int j) const {
    return ((adj[static_cast<size_t>(i - 1)] >> (j - 1)) & 1u) != 0;
  }
  int degree(int v) const { return std::popcount(adj[static_cast<size_t>(v - 1)]); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_complete() const {
    return static_cast<long long>(edges.size()) == static_cast<long long>(n) * (n - 1) / 2;
  }
  bool is_connected() const {
    if (n <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (int v = 0; v < n; ++v)
        if ((frontier >> v) & 1u) next |= adj[static_cast<size_t>(v)];
      frontier = next & ~seen;
      seen |= next;
    }
    return std::popcount(seen) == n;
  }
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n < 1) throw input_error("graph needs n >= 1, got n=" + std::to_string(n));
  if (n > 64) throw size_limit_error("graphs are limited to n <= 64, got n=" + std::to_string(n));
  Graph g;
  g.n = n;
  g.adj.assign(static_cast<size_t>(n), 0);
  for (auto [a, b] : edge_list) {
    if (a == b)
      throw input_error("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (a < 1 || a > n || b < 1 || b > n)
      throw input_error("edge vertex out of range (" + std::to_string(a) + "," +
                        std::to_string(b) + ") for n=" + std::to_string(n));
    if (a > b) std::swap(a, b);
    if (g.has_edge(a, b))
      throw input_error("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    g.adj[static_cast<size_t>(a - 1)] |= 1ull << (b - 1);
    g.adj[static_cast<size_t>(b - 1)] |= 1ull << (a - 1);
    g.edges.emplace_back(a, b);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// Dense bit-matrix over GF(2); rows are 64-bit masks (cols <= 64).
struct BitMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> row_bits;

  bool at(int r, int c) const { return ((row_bits[static_cast<size_t>(r)] >> c) & 1u) != 0; }
  void set(int r, int c) { row_bits[static_cast<size_t>(r)] |= 1ull << c; }
};

inline BitMatrix adjacency_matrix(const Graph& g) {
  BitMatrix m;
  m.rows = m.cols = g.n;
  m.row_bits = g.adj;
  return m;
}

inline int gf2_rank(std::vector<std::uint64_t> rows_bits, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows_bits.size()); ++c) {
    size_t pivot = static_cast<size_t>(rank);
    while (pivot < rows_bits.size() && ((rows_bits[pivot] >> c) & 1u) == 0) ++pivot;
    if (pivot == rows_bits.size()) continue;
    std::swap(rows_bits[static_cast<size_t>(rank)], rows_bits[pivot]);
    for (size_t r = 0; r < rows_bits.size(); ++r)
      if (r != static_cast<size_t>(rank) && ((rows_bits[r] >> c) & 1u))
        rows_bits[r] ^= rows_bits[static_cast<size_t>(rank)];
    ++rank;
  }
  return rank;
}

inline int gf2_rank(const BitMatrix& m) { return gf2_rank(m.row_bits, m.cols); }

/// Bipartite entanglement of the graph state across (part_a | rest) in
/// ebits, via the stabilizer identity: it equals the GF(2) rank of the
/// off-diagonal adjacency block A[part_a, complement].
inline int entropy_cut_rank(const Graph& g, const std::vector<int>& part_a) {
  if (part_a.empty()) throw input_error("bipartition part must be nonempty");
  std::uint64_t part_mask = 0;
  for (int v : part_a) {
    if (v < 1 || v > g.n)
      throw input_error("bipartition vertex out of range: " + std::to_string(v));
    if ((part_mask >> (v - 1)) & 1u)
      throw input_error("bipartition vertex repeated: " + std::to_string(v));
    part_mask |= 1ull << (v - 1);
  }
  std::uint64_t all = g.n == 64 ? ~0ull : (1ull << g.n) - 1;
  std::uint64_t comp_mask = all & ~part_mask;
  if (comp_mask == 0) throw input_error("bipartition part must be a proper subset");
  std::vector<std::uint64_t> rows;
  rows.reserve(part_a.size());
  for (int v = 1; v <= g.n; ++v)
    if ((part_mask >> (v - 1)) & 1u) rows.push_back(g.adj[static_cast<size_t>(v - 1)] & comp_mask);
  return gf2_rank(std::move(rows), g.n);
}

// ---------------------------------------------------------------------------
// Canonical forms and exhaustive enumeration (desk scale: n <= 8 forms,
// n <= 7 enumeration).

inline int pair_index(int i, int j) {  // i < j, 1-based
  return (j - 2) * (j - 1) / 2 + (i - 1);
}

inline std::uint64_t edge_mask(const Graph& g) {
  std::uint64_t mask = 0;
  for (auto [a, b] : g.edges) mask |= 1ull << pair_index(a, b);
  return mask;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if ((mask >> pair_index(i, j)) & 1u) edges.emplace_back(i, j);
  return make_graph(n, edges);
}

/// Isomorphism-class identifier: the lexicographically smallest adjacency
/// bit-string over vertex relabelings, with pair index 0 most significant.
struct CanonicalForm {
  int n = 0;
  std::uint64_t packed = 0;  // bit (C-1-idx) holds pair idx

  bool has_pair(int i, int j) const {
    int cbits = n * (n - 1) / 2;
    return ((packed >> (cbits - 1 - pair_index(i, j))) & 1u) != 0;
  }
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator<(const CanonicalForm& l, const CanonicalForm& r) {
    return l.n != r.n ? l.n < r.n : l.packed < r.packed;
  }
  std::vector<std::uint8_t> bytes() const {
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(n));
    for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(packed >> s));
    return out;
  }
};

namespace detail {

// Streams the relabeled adjacency bits in pair-index order and keeps the
// lexicographic minimum, pruning as soon as a prefix exceeds the best.
class CanonicalMinimizer {
 public:
  CanonicalMinimizer(int n, std::uint64_t mask) : n_(n), cbits_(n * (n - 1) / 2) {
    adj_.fill(0);
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        if ((mask >> pair_index(i, j)) & 1u) {
          adj_[static_cast<size_t>(i - 1)] |= 1u << (j - 1);
          adj_[static_cast<size_t>(j - 1)] |= 1u << (i - 1);
        }
    pairs_.reserve(static_cast<size_t>(cbits_));
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) pairs_.emplace_back(i, j);
    best_ = ~0ull >> (64 - cbits_);
  }

  // q[p] = original vertex placed at position p+1.
  void consider(const std::array<int, 8>& q) {
    std::uint64_t value = 0;
    bool already_less = false;
    for (int idx = 0; idx < cbits_; ++idx) {
      auto [i, j] = pairs_[static_cast<size_t>(idx)];
      unsigned bit =
          (adj_[static_cast<size_t>(q[static_cast<size_t>(i - 1)] - 1)] >>
           (q[static_cast<size_t>(j - 1)] - 1)) &
          1u;
      value = (value << 1) | bit;
      if (!already_less) {
        std::uint64_t best_prefix = best_ >> (cbits_ - 1 - idx);
        if (value > best_prefix) return;
        if (value < best_prefix) already_less = true;
      }
    }
    if (value < best_) best_ = value;
  }

  std::uint64_t best() const { return best_; }
  int degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v - 1)]); }

 private:
  int n_;
  int cbits_;
  std::array<std::uint32_t, 8> adj_{};
  std::vector<std::pair<int, int>> pairs_;
  std::uint64_t best_ = 0;
};

inline std::uint64_t canonical_packed(int n, std::uint64_t mask) {
  if (n == 1) return 0;
  CanonicalMinimizer mini(n, mask);
  std::array<int, 8> q{};
  if (n <= 6) {
    std::array<int, 8> verts{};
    for (int v = 0; v < n; ++v) verts[static_cast<size_t>(v)] = v + 1;
    do {
      q = verts;
      mini.consider(q);
    } while (std::next_permutation(verts.begin(), verts.begin() + n));
    return mini.best();
  }
  // Degree-partition pruning: isomorphisms preserve degrees, so restricting
  // to degree-sorted placements keeps the minimum a class invariant.
  std::vector<std::vector<int>> classes;
  {
    std::vector<std::pair<int, int>> by_degree;  // (-degree, vertex)
    for (int v = 1; v <= n; ++v) by_degree.emplace_back(-mini.degree(v), v);
    std::sort(by_degree.begin(), by_degree.end());
    for (auto [negdeg, v] : by_degree) {
      if (classes.empty() || -negdeg != mini.degree(classes.back().front()))
        classes.emplace_back();
      classes.back().push_back(v);
    }
  }
  // Odometer over per-class permutations.
  bool done = false;
  while (!done) {
    size_t pos = 0;
    for (const auto& cls : classes)
      for (int v : cls) q[pos++] = v;
    mini.consider(q);
    done = true;
    for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
      if (std::next_permutation(it->begin(), it->end())) {
        done = false;
        break;
      }
      std::sort(it->begin(), it->end());
    }
  }
  return mini.best();
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.n > 8)
    throw size_limit_error("canonical forms are limited to n <= 8, got n=" +
                           std::to_string(g.n));
  return CanonicalForm{g.n, detail::canonical_packed(g.n, edge_mask(g))};
}

inline Graph graph_from_canonical(const CanonicalForm& cf) {
  int cbits = cf.n * (cf.n - 1) / 2;
  std::uint64_t mask = 0;
  for (int idx = 0; idx < cbits; ++idx)
    if ((cf.packed >> (cbits - 1 - idx)) & 1u) mask |= 1ull << idx;
  return graph_from_mask(cf.n, mask);
}

enum class Descriptor { fully_separable, bi_separable, entangled, fully_entangled };

inline std::string to_string(Descriptor d) {
  switch (d) {
    case Descriptor::fully_separable: return "Fully Separable";
    case Descriptor::bi_separable: return "Bi-Separable";
    case Descriptor::entangled: return "Entangled";
    case Descriptor::fully_entangled: return "Fully Entangled";
  }
  return "?";
}

inline Descriptor descriptor_of(const Graph& g) {
  if (g.edges.empty()) return Descriptor::fully_separable;
  if (g.is_complete()) return Descriptor::fully_entangled;
  if (!g.is_connected()) return Descriptor::bi_separable;
  return Descriptor::entangled;
}

struct ClassRecord {
  CanonicalForm canonical;
  Graph representative;
  long long labeled_count = 0;
  long long total_entanglement = 0;  // ebits, computed once from the representative
  Descriptor descriptor = Descriptor::fully_separable;
};

namespace detail {

inline std::unordered_map<std::uint64_t, long long> bucket_range(int n, std::uint64_t lo,
                                                                 std::uint64_t hi) {
  std::unordered_map<std::uint64_t, long long> counts;
  for (std::uint64_t mask = lo; mask < hi; ++mask) ++counts[canonical_packed(n, mask)];
  return counts;
}

}  // namespace detail

/// Buckets all 2^C(n,2) labeled graphs by canonical form. The per-class
/// total is evaluated once on the canonical representative; rows are sorted
/// by (total, canonical form). The mask space may be split across jobs; the
/// merge is a plain count sum, so results are partition-independent.
inline std::vector<ClassRecord> enumerate_classes(
    int n, const std::function<long long(const Graph&)>& total_of, int jobs = 1) {
  if (n < 1) throw input_error("enumeration needs n >= 1, got n=" + std::to_string(n));
  if (n > 7)
    throw size_limit_error("exhaustive enumeration is limited to n <= 7, got n=" +
                           std::to_string(n));
  std::unordered_map<std::uint64_t, long long> counts;
  if (n == 1) {
    counts[0] = 1;
  } else {
    int cbits = n * (n - 1) / 2;
    std::uint64_t total_masks = 1ull << cbits;
    std::size_t chunks = jobs < 1 ? 1 : static_cast<std::size_t>(jobs);
    if (chunks > 1) chunks *= 4;  // finer grain evens out chunk cost
    if (chunks > total_masks) chunks = static_cast<std::size_t>(total_masks);
    std::uint64_t step = (total_masks + chunks - 1) / chunks;
    auto partials = parallel_map<std::unordered_map<std::uint64_t, long long>>(
        chunks, jobs, [&](std::size_t c) {
          std::uint64_t lo = static_cast<std::uint64_t>(c) * step;
          std::uint64_t hi = std::min(total_masks, lo + step);
          return detail::bucket_range(n, lo, hi);
        });
    for (auto& part : partials)
      for (auto [packed, cnt] : part) counts[packed] += cnt;
  }

  std::vector<ClassRecord> records;
  records.reserve(counts.size());
  for (auto [packed, cnt] : counts) {
    ClassRecord rec;
    rec.canonical = CanonicalForm{n, packed};
    rec.representative = graph_from_canonical(rec.canonical);
    rec.labeled_count = cnt;
    rec.descriptor = descriptor_of(rec.representative);
    records.push_back(std::move(rec));
  }
  auto totals = parallel_map<long long>(records.size(), jobs, [&](std::size_t i) {
    return total_of(records[i].representative);
  });
  for (std::size_t i = 0; i < records.size(); ++i) records[i].total_entanglement = totals[i];
  std::sort(records.begin(), records.end(), [](const ClassRecord& l, const ClassRecord& r) {
    if (l.total_entanglement != r.total_entanglement)
      return l.total_entanglement < r.total_entanglement;
    return l.canonical < r.canonical;
  });
  return records;
}

}  // namespace entmat
