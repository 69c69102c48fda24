#pragma once

#include <string>
#include <vector>

#include "entmat/entmatrix.hpp"
#include "entmat/errors.hpp"
#include "entmat/graph.hpp"

namespace entmat {

struct ClassificationTable {
  int n = 0;
  std::vector<ClassRecord> rows;  // ordered by (total entanglement, canonical form)
};

/// Non-isomorphic classes of n-qubit graph states with per-class totals.
/// n up to 6 is fast; n = 7 is supported but enumerates 2^21 graphs.
inline ClassificationTable classify(int n, Backend backend = Backend::cut_rank, int jobs = 1) {
  if (n < 2) throw input_error("classification needs n >= 2, got n=" + std::to_string(n));
  if (n > 7)
    throw size_limit_error("classification is limited to n <= 7, got n=" + std::to_string(n));
  ClassificationTable table;
  table.n = n;
  table.rows = enumerate_classes(
      n,
      [backend](const Graph& g) {
        return total_entanglement(build_entanglement_matrix(g, backend));
      },
      jobs);
  return table;
}

}  // namespace entmat
