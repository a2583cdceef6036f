#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinlat/eigensolver.hpp"
#include "spinlat/graph.hpp"
#include "spinlat/hamiltonian.hpp"

namespace spinlat {

/// Reduced density matrix of the kept block. Row index a packs the block
/// spins in ascending vertex order (lowest vertex in bit 0).
struct ReducedDensityMatrix {
  VertexSet block;
  Eigen::MatrixXd matrix;
};

/// Partial sums of a probability vector sorted in decreasing order.
struct CumulantSeries {
  std::vector<double> values;
  std::size_t m() const noexcept { return values.size(); }
};

ReducedDensityMatrix reduced_density(std::span<const double> psi, const VertexSet& block, int n);

/// Eigenvalues of rho in decreasing order.
std::vector<double> rho_spectrum(const ReducedDensityMatrix& rho);

/// Von Neumann entropy in bits. Eigenvalues in [-1e-10, 0) count as zero,
/// anything more negative is a numerical-validity error.
double entropy(const ReducedDensityMatrix& rho);
double entropy_of_spectrum(const std::vector<double>& eigenvalues);

int schmidt_rank(const ReducedDensityMatrix& rho, double tol = 1e-10);
int schmidt_rank_of_spectrum(const std::vector<double>& eigenvalues, double tol = 1e-10);

/// c_l for l = 1..m from |psi_i|^2, selecting only the top m probabilities.
CumulantSeries ground_cumulants(std::span<const double> psi, int m = 5);

CumulantSeries rho_cumulants(const ReducedDensityMatrix& rho, int m = 5);
CumulantSeries cumulants_of_spectrum(const std::vector<double>& descending, int m);

/// |<e_target| dH/ds |e_1>| divided by the squared gap E_target - E_1.
/// target is 1-based as in e_1, e_2, ...
double adiabatic_ratio(const HamiltonianOperator& h, const ScheduleDerivative& d,
                       const SpectrumResult& s, int target);

/// The matrix element |<e_target| dH/ds |e_1>| alone.
double adiabatic_numerator(const HamiltonianOperator& h, const ScheduleDerivative& d,
                           const SpectrumResult& s, int target);

/// Sorted complement of block within {0..n-1}.
VertexSet complement(const VertexSet& block, int n);

}  // namespace spinlat
