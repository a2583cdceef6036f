#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinlat/hamiltonian.hpp"

namespace spinlat {

struct SpectrumResult {
  std::vector<double> eigenvalues;          // ascending
  std::vector<StateVector> eigenvectors;    // unit norm, real
  std::vector<double> residuals;            // ||H v - lambda v||, recomputed
  int iterations = 0;                       // block expansion steps
  long matvecs = 0;
  double degeneracy_tolerance = 1e-8;
  /// Indices grouped by |E_i - E_j| <= tol * max(1, |E_i|), chained in order.
  std::vector<std::vector<int>> degeneracy_classes;

  std::size_t k() const noexcept { return eigenvalues.size(); }
  /// Size of the class containing the ground state.
  int ground_cluster_size() const;
};

struct LanczosOptions {
  int k = 4;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  double degeneracy_tol = 1e-8;
  /// Block width; 0 means k, so any degenerate cluster within the lowest k
  /// eigenvalues is resolved.
  int block_size = 0;
  /// Krylov basis capacity in vectors; 0 picks one from max_basis_bytes.
  int max_basis = 0;
  std::size_t max_basis_bytes = std::size_t{768} << 20;
  /// Matvec budget; 0 means the default 400 * k * sqrt(n), at least 4000.
  long max_matvecs = 0;
  /// Optional starting vectors (warm start), used as the first block columns.
  std::vector<StateVector> start;
};

/// k lowest eigenpairs by block Lanczos with full reorthogonalization and
/// thick restarts. Deterministic given (operator, options).
SpectrumResult lowest_eigenpairs(const HamiltonianOperator& h, const LanczosOptions& options);

inline SpectrumResult lowest_eigenpairs(const HamiltonianOperator& h, int k, double tol,
                                        std::uint64_t seed) {
  LanczosOptions options;
  options.k = k;
  options.tol = tol;
  options.seed = seed;
  return lowest_eigenpairs(h, options);
}

struct DenseSpectrum {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // columns
};

/// Full spectrum by dense symmetric diagonalization (n <= max_n).
DenseSpectrum dense_spectrum(const HamiltonianOperator& h, int max_n = 12);

/// Dense matrix of H, built entry by entry from the edge list and fields.
Eigen::MatrixXd dense_matrix(const HamiltonianOperator& h, int max_n = 12);

struct Gaps {
  double delta12 = 0.0;
  double delta13 = 0.0;
};

Gaps gaps(const SpectrumResult& s);

/// Groups ascending eigenvalues into classes of near-equal values.
std::vector<std::vector<int>> degeneracy_classes(const std::vector<double>& eigenvalues,
                                                 double tol);

}  // namespace spinlat
