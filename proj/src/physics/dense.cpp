#include <bit>

#include "spinlat/eigensolver.hpp"
#include "spinlat/errors.hpp"

namespace spinlat {

Eigen::MatrixXd dense_matrix(const HamiltonianOperator& h, int max_n) {
  const int n = h.n();
  if (n > max_n) {
    fail(ErrorKind::budget_exceeded,
         "dense_spectrum: n=" + std::to_string(n) + " exceeds the dense budget of " +
             std::to_string(max_n));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  const auto& p = h.params();
  for (Eigen::Index s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (const auto& e : h.graph().edges()) diag += spin_z(s, e.u) * spin_z(s, e.v);
    for (int i = 0; i < n; ++i) diag += p.b * spin_z(s, i);
    m(s, s) = diag;
    for (int i = 0; i < n; ++i) m(s ^ (Eigen::Index{1} << i), s) += p.gamma;
  }
  return m;
}

DenseSpectrum dense_spectrum(const HamiltonianOperator& h, int max_n) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_matrix(h, max_n));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace spinlat
