#include "spinlat/observables.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "spinlat/errors.hpp"
#include "spinlat/linalg.hpp"

namespace spinlat {
namespace {

void require_normalized(std::span<const double> psi, const char* where) {
  const double norm = linalg::norm(psi);
  if (std::abs(norm - 1.0) > 1e-8) {
    fail(ErrorKind::invalid_argument,
         std::string(where) + ": state norm " + std::to_string(norm) + " is not 1");
  }
}

// scatter[a] places the bits of a onto the given vertex positions
std::vector<std::uint64_t> scatter_table(const VertexSet& vertices) {
  const std::size_t size = std::size_t{1} << vertices.size();
  std::vector<std::uint64_t> table(size, 0);
  for (std::size_t a = 1; a < size; ++a) {
    const auto low = static_cast<std::size_t>(std::countr_zero(a));
    table[a] = table[a & (a - 1)] | (std::uint64_t{1} << vertices[low]);
  }
  return table;
}

CumulantSeries partial_sums(const std::vector<double>& descending) {
  CumulantSeries out;
  out.values.reserve(descending.size());
  double sum = 0.0;
  for (double p : descending) {
    sum += p;
    out.values.push_back(sum);
  }
  return out;
}

}  // namespace

VertexSet complement(const VertexSet& block, int n) {
  VertexSet rest;
  std::size_t j = 0;
  for (int v = 0; v < n; ++v) {
    if (j < block.size() && block[j] == v) {
      ++j;
    } else {
      rest.push_back(v);
    }
  }
  return rest;
}

ReducedDensityMatrix reduced_density(std::span<const double> psi, const VertexSet& block, int n) {
  require(n >= 1 && n <= 40, "reduced_density: bad spin count");
  require(psi.size() == (std::size_t{1} << n), "reduced_density: state length is not 2^n");
  require(!block.empty(), "reduced_density: block is empty");
  require(static_cast<int>(block.size()) < n, "reduced_density: block must be a proper subset");
  require(std::is_sorted(block.begin(), block.end()) &&
              std::adjacent_find(block.begin(), block.end()) == block.end(),
          "reduced_density: block must be sorted and duplicate-free");
  require(block.front() >= 0 && block.back() < n, "reduced_density: block vertex out of range");
  require_normalized(psi, "reduced_density");

  const VertexSet rest = complement(block, n);
  const auto kept = scatter_table(block);
  const auto traced = scatter_table(rest);
  const auto rows = static_cast<Eigen::Index>(kept.size());
  const auto cols = static_cast<Eigen::Index>(traced.size());

  // M(a, b) = psi[(a, b)], rho = M M^T
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index b = 0; b < cols; ++b) {
    for (Eigen::Index a = 0; a < rows; ++a) m(a, b) = psi[kept[a] | traced[b]];
  }
  ReducedDensityMatrix rho;
  rho.block = block;
  rho.matrix = Eigen::MatrixXd::Zero(rows, rows);
  rho.matrix.selfadjointView<Eigen::Lower>().rankUpdate(m);
  rho.matrix.triangularView<Eigen::StrictlyUpper>() = rho.matrix.transpose();
  return rho;
}

std::vector<double> rho_spectrum(const ReducedDensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho.matrix, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double entropy_of_spectrum(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -1e-10) {
      fail(ErrorKind::numerical_validity,
           "density matrix eigenvalue " + std::to_string(lambda) + " is below -1e-10");
    }
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

double entropy(const ReducedDensityMatrix& rho) { return entropy_of_spectrum(rho_spectrum(rho)); }

int schmidt_rank_of_spectrum(const std::vector<double>& eigenvalues, double tol) {
  require(tol > 0.0, "schmidt_rank: tolerance must be positive");
  return static_cast<int>(
      std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double l) { return l > tol; }));
}

int schmidt_rank(const ReducedDensityMatrix& rho, double tol) {
  return schmidt_rank_of_spectrum(rho_spectrum(rho), tol);
}

CumulantSeries ground_cumulants(std::span<const double> psi, int m) {
  require(m >= 1 && static_cast<std::size_t>(m) <= psi.size(),
          "ground_cumulants: m must lie in [1, 2^n]");
  require_normalized(psi, "ground_cumulants");
  std::vector<double> prob(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) prob[i] = psi[i] * psi[i];
  auto top = prob.begin() + m;
  std::nth_element(prob.begin(), top - 1, prob.end(), std::greater<>());
  prob.resize(static_cast<std::size_t>(m));
  std::sort(prob.begin(), prob.end(), std::greater<>());
  return partial_sums(prob);
}

CumulantSeries cumulants_of_spectrum(const std::vector<double>& descending, int m) {
  require(m >= 1 && static_cast<std::size_t>(m) <= descending.size(),
          "rho_cumulants: m must lie in [1, 2^|A|]");
  std::vector<double> head(descending.begin(), descending.begin() + m);
  for (double& p : head) p = std::max(p, 0.0);
  return partial_sums(head);
}

CumulantSeries rho_cumulants(const ReducedDensityMatrix& rho, int m) {
  return cumulants_of_spectrum(rho_spectrum(rho), m);
}

double adiabatic_numerator(const HamiltonianOperator& h, const ScheduleDerivative& d,
                           const SpectrumResult& s, int target) {
  require(target >= 1 && static_cast<std::size_t>(target) <= s.k(),
          "adiabatic_ratio: target level outside the computed spectrum");
  const auto& ground = s.eigenvectors[0];
  const auto& excited = s.eigenvectors[static_cast<std::size_t>(target - 1)];
  const StateVector dpsi = apply_derivative(h.n(), d, ground);
  return std::abs(linalg::dot(excited, dpsi));
}

double adiabatic_ratio(const HamiltonianOperator& h, const ScheduleDerivative& d,
                       const SpectrumResult& s, int target) {
  const double numerator = adiabatic_numerator(h, d, s, target);
  const double e1 = s.eigenvalues[0];
  const double gap = s.eigenvalues[static_cast<std::size_t>(target - 1)] - e1;
  if (gap <= s.degeneracy_tolerance * std::max(1.0, std::abs(e1))) {
    fail(ErrorKind::degenerate_gap, "adiabatic_ratio: gap to level " + std::to_string(target) +
                                        " is below the degeneracy tolerance");
  }
  return numerator / (gap * gap);
}

}  // namespace spinlat
