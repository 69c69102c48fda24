#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "entmat/errors.hpp"
#include "entmat/geometry.hpp"

namespace entmat {

inline constexpr int kMaxFormulaQubits = 48;

enum class EmaxCase { odd, even_c_half_integer, even_c_half_nonint, multiple_of_12 };

inline std::string to_string(EmaxCase c) {
  switch (c) {
    case EmaxCase::odd: return "odd";
    case EmaxCase::even_c_half_integer: return "even-C-half-integer";
    case EmaxCase::even_c_half_nonint: return "even-C-half-nonint";
    case EmaxCase::multiple_of_12: return "multiple-of-12";
  }
  return "?";
}

/// Closed-form maximum entanglement of the complete n-qubit graph state.
/// Odd n: n^2 - n. Even n with C = n/2 - 1 rings: 5n^2/4 - 3n/2 when C/2 is
/// an integer, 5n^2/4 - 2n otherwise, and 5n^2/4 when n is a multiple of 12.
inline std::pair<long long, EmaxCase> emax_formula(int n) {
  if (n < 2) throw input_error("emax is defined for n >= 2, got n=" + std::to_string(n));
  long long nn = n;
  if (n % 2 == 1) return {nn * nn - nn, EmaxCase::odd};
  if (n % 12 == 0) return {5 * nn * nn / 4, EmaxCase::multiple_of_12};
  long long rings = nn / 2 - 1;
  if (rings % 2 == 0) return {5 * nn * nn / 4 - 3 * nn / 2, EmaxCase::even_c_half_integer};
  return {5 * nn * nn / 4 - 2 * nn, EmaxCase::even_c_half_nonint};
}

struct DegreeCounts {
  long long count_deg2 = 0;  // includes the primary ring
  long long count_deg4 = 0;
  int center_degree = 0;
};

/// Ring-degree counting model for even n away from the multiple-of-12
/// anomaly: deg-2 midpoints n*ceil(C/2), deg-4 midpoints n*floor(C/2),
/// center degree n.
inline DegreeCounts degree_count_model(int n) {
  if (n < 2 || n % 2 != 0)
    throw input_error("degree count model needs even n >= 2, got n=" + std::to_string(n));
  if (n % 12 == 0)
    throw input_error("n=" + std::to_string(n) +
                      " is a multiple of 12; use replacement_model for the anomalous ring");
  long long rings = n / 2 - 1;
  long long half_up = (rings + 1) / 2;
  long long half_down = rings / 2;
  return {static_cast<long long>(n) * half_up, static_cast<long long>(n) * half_down, n};
}

struct RingReplacement {
  int n = 0;
  int from_degree = 0;
  int to_degree = 0;
  int ring_size = 0;        // a full ring of n midpoints changes degree
  long long added_ebits = 0;  // ring_size * (to/2 - from/2)
};

/// Multiple-of-12 anomaly: odd multiples replace a degree-2 ring with
/// degree 6, even multiples a degree-4 ring with degree 8. Either way the
/// ring gains 2n ebits, lifting 5n^2/4 - 2n to exactly 5n^2/4.
inline RingReplacement replacement_model(int n) {
  if (n < 12 || n % 12 != 0)
    throw input_error("replacement model applies to multiples of 12 only, got n=" +
                      std::to_string(n));
  RingReplacement r;
  r.n = n;
  bool odd_multiple = (n / 12) % 2 == 1;
  r.from_degree = odd_multiple ? 2 : 4;
  r.to_degree = odd_multiple ? 6 : 8;
  r.ring_size = n;
  r.added_ebits = static_cast<long long>(n) * (r.to_degree / 2 - r.from_degree / 2);
  return r;
}

struct RingSubtotal {
  int ring_index = 0;     // 0 = outermost ring of the census
  int count = 0;          // midpoints on the ring
  int multiplicity = 0;   // common multiplicity, 0 if mixed
  long long subtotal = 0; // sum of multiplicities, in ebits
  double radius = 0.0;
};

struct MaxEntBreakdown {
  int n = 0;
  long long primary_block = 0;          // n(n+1)/2
  std::vector<RingSubtotal> per_ring;   // secondary rings only
  long long center = 0;                 // n/2 for even n, 0 for odd
  long long constructive_total = 0;
  long long formula_total = 0;
  EmaxCase case_tag = EmaxCase::odd;
  bool match = false;
};

/// Constructive maximum-entanglement computation from the complete-graph
/// midpoint census alone (no quantum simulation): the primary block
/// contributes n(n+1)/2 and every secondary midpoint its multiplicity.
inline MaxEntBreakdown emax_constructive(int n, double tol = kCoincidenceTol) {
  if (n < 2 || n > kMaxFormulaQubits)
    throw input_error("constructive check supports 2 <= n <= " +
                      std::to_string(kMaxFormulaQubits) + ", got n=" + std::to_string(n));
  MidpointCensus census = build_midpoint_census(n, tol);
  MaxEntBreakdown b;
  b.n = n;
  b.primary_block = static_cast<long long>(n) * (n + 1) / 2;
  int ring_index = 0;
  for (const Ring& ring : census.rings) {
    bool is_center = ring.radius <= census.tolerance;
    bool secondary_ring = false;
    long long subtotal = 0;
    int common_mult = -1;
    bool mixed = false;
    for (int id : ring.members) {
      const MidpointRecord& rec = census.records[static_cast<std::size_t>(id)];
      if (rec.kind == MidpointKind::center) {
        b.center += rec.multiplicity;
      } else if (rec.kind == MidpointKind::secondary) {
        secondary_ring = true;
        subtotal += rec.multiplicity;
        if (common_mult == -1)
          common_mult = rec.multiplicity;
        else if (common_mult != rec.multiplicity)
          mixed = true;
      }
    }
    if (!is_center && secondary_ring) {
      RingSubtotal rs;
      rs.ring_index = ring_index;
      rs.count = static_cast<int>(ring.members.size());
      rs.multiplicity = mixed ? 0 : common_mult;
      rs.subtotal = subtotal;
      rs.radius = ring.radius;
      b.per_ring.push_back(rs);
    }
    if (!is_center) ++ring_index;
  }
  b.constructive_total = b.primary_block + b.center;
  for (const RingSubtotal& rs : b.per_ring) b.constructive_total += rs.subtotal;
  auto [formula, tag] = emax_formula(n);
  b.formula_total = formula;
  b.case_tag = tag;
  b.match = b.constructive_total == b.formula_total;
  return b;
}

struct CensusTableRow {
  int n = 0;
  long long total_midpoints = 0;
  std::map<int, int> degree_histogram;
  int ring_count = 0;  // concentric circles C, center excluded
};

inline CensusTableRow census_table_row(int n, double tol = kCoincidenceTol) {
  MidpointCensus census = build_midpoint_census(n, tol);
  CensusTableRow row;
  row.n = n;
  row.total_midpoints = static_cast<long long>(census.records.size());
  for (const MidpointRecord& rec : census.records) row.degree_histogram[rec.degree]++;
  for (const Ring& ring : census.rings)
    if (ring.radius > census.tolerance) ++row.ring_count;
  return row;
}

inline std::vector<CensusTableRow> census_table(int n_max, double tol = kCoincidenceTol) {
  if (n_max > kMaxFormulaQubits)
    throw input_error("census table supports n <= " + std::to_string(kMaxFormulaQubits));
  std::vector<CensusTableRow> rows;
  for (int n = 3; n <= n_max; ++n) rows.push_back(census_table_row(n, tol));
  return rows;
}

struct CompareRow {
  int n = 0;
  EmaxCase case_tag = EmaxCase::odd;
  long long formula = 0;
  long long constructive = 0;
  bool match = false;
};

/// Formula vs constructive totals per n. Multiple-of-12 rows report the raw
/// census outcome; nothing forces agreement there.
inline std::vector<CompareRow> compare_report(int n_min, int n_max) {
  if (n_min < 2 || n_max > kMaxFormulaQubits || n_min > n_max)
    throw input_error("compare report needs 2 <= n_min <= n_max <= " +
                      std::to_string(kMaxFormulaQubits));
  std::vector<CompareRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    MaxEntBreakdown b = emax_constructive(n);
    rows.push_back({n, b.case_tag, b.formula_total, b.constructive_total, b.match});
  }
  return rows;
}

}  // namespace entmat
