#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "entmat/errors.hpp"
#include "entmat/graph.hpp"

namespace entmat {

inline constexpr int kMaxSimQubits = 14;

/// Dense n-qubit state; basis index bit k holds qubit k+1.
struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amplitudes;
};

/// |G> = prod_{(i,j) in E} CZ_ij |+>^n. Amplitudes stay +-2^(-n/2); each CZ
/// negates the basis states where both endpoint bits are set.
inline StateVector graph_state_vector(const Graph& g) {
  if (g.n > kMaxSimQubits)
    throw size_limit_error("dense simulation is limited to n <= " +
                           std::to_string(kMaxSimQubits) + ", got n=" + std::to_string(g.n));
  StateVector s;
  s.n = g.n;
  std::size_t dim = 1ull << g.n;
  double amp = std::pow(2.0, -g.n / 2.0);
  s.amplitudes.assign(dim, std::complex<double>(amp, 0.0));
  for (auto [a, b] : g.edges) {
    std::uint64_t pair_bits = (1ull << (a - 1)) | (1ull << (b - 1));
    for (std::size_t idx = 0; idx < dim; ++idx)
      if ((idx & pair_bits) == pair_bits) s.amplitudes[idx] = -s.amplitudes[idx];
  }
  return s;
}

/// Reduced-state eigenvalues, descending, zeros kept. Computed on the
/// smaller side of the cut (both sides share the nonzero spectrum), with
/// values below 1e-12 clamped to 0.
struct Spectrum {
  std::vector<double> eigenvalues;
};

inline Spectrum reduced_spectrum(const StateVector& s, const std::vector<int>& part_a) {
  if (part_a.empty()) throw input_error("bipartition part must be nonempty");
  std::uint64_t part_mask = 0;
  for (int v : part_a) {
    if (v < 1 || v > s.n)
      throw input_error("bipartition vertex out of range: " + std::to_string(v));
    if ((part_mask >> (v - 1)) & 1u)
      throw input_error("bipartition vertex repeated: " + std::to_string(v));
    part_mask |= 1ull << (v - 1);
  }
  if (std::popcount(part_mask) == s.n)
    throw input_error("bipartition part must be a proper subset");

  std::uint64_t full = (1ull << s.n) - 1;
  std::uint64_t small_mask = part_mask, large_mask = full & ~part_mask;
  if (std::popcount(small_mask) > std::popcount(large_mask)) std::swap(small_mask, large_mask);
  int a_bits = std::popcount(small_mask);
  int b_bits = s.n - a_bits;

  std::vector<int> a_qubits, b_qubits;
  for (int q = 0; q < s.n; ++q)
    ((small_mask >> q) & 1u ? a_qubits : b_qubits).push_back(q);

  Eigen::MatrixXcd m(1ll << a_bits, 1ll << b_bits);
  for (std::uint64_t idx = 0; idx <= full; ++idx) {
    std::uint64_t r = 0, c = 0;
    for (std::size_t k = 0; k < a_qubits.size(); ++k) r |= ((idx >> a_qubits[k]) & 1u) << k;
    for (std::size_t k = 0; k < b_qubits.size(); ++k) c |= ((idx >> b_qubits[k]) & 1u) << k;
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = s.amplitudes[idx];
  }

  Eigen::MatrixXcd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  Spectrum sp;
  sp.eigenvalues.assign(solver.eigenvalues().data(),
                        solver.eigenvalues().data() + solver.eigenvalues().size());
  for (double& p : sp.eigenvalues)
    if (p < 1e-12) p = 0.0;  // stabilizer spectra are exact dyadics; tiny values are noise
  std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end(), std::greater<double>());
  return sp;
}

/// -sum p log2 p with 0 log 0 := 0; result in ebits.
inline double von_neumann_entropy(const Spectrum& sp) {
  double h = 0.0;
  for (double p : sp.eigenvalues)
    if (p > 0.0) h -= p * std::log2(p);
  return h < 0.0 ? 0.0 : h;
}

/// (1/(1-alpha)) log2 sum p^alpha; alpha > 0, alpha != 1 (use
/// von_neumann_entropy for the alpha -> 1 limit).
inline double renyi_entropy(const Spectrum& sp, double alpha) {
  if (!(alpha > 0.0))
    throw input_error("Renyi order must be positive, got alpha=" + std::to_string(alpha));
  if (alpha == 1.0)
    throw input_error("Renyi order 1 is the Von Neumann limit; call von_neumann_entropy");
  double acc = 0.0;
  for (double p : sp.eigenvalues)
    if (p > 0.0) acc += std::pow(p, alpha);
  return std::log2(acc) / (1.0 - alpha);
}

}  // namespace entmat
