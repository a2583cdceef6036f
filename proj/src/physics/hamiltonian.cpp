#include "spinlat/hamiltonian.hpp"

#include <bit>
#include <cmath>

#include "spinlat/errors.hpp"

namespace spinlat {

HamiltonianOperator::HamiltonianOperator(const Graph& g, FieldParams params, BuildOptions options)
    : graph_(g), params_(params) {
  require(std::isfinite(params.b) && std::isfinite(params.gamma), "field parameters must be finite");
  if (g.n() > options.max_n && !options.override_budget) {
    fail(ErrorKind::budget_exceeded, "hamiltonian: n=" + std::to_string(g.n()) +
                                         " exceeds the budget of " + std::to_string(options.max_n) +
                                         " spins (set SPINLAT_BUDGET_OVERRIDE to lift it)");
  }
  require(g.n() <= 40, "hamiltonian: n=" + std::to_string(g.n()) + " is beyond addressable memory");

  const int n = g.n();
  const std::int64_t dim = std::int64_t{1} << n;
  diag_.assign(static_cast<std::size_t>(dim), 0.0);
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const double b = params.b;

#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < dim; ++s) {
    const auto bits = static_cast<std::uint64_t>(s);
    int unequal = 0;
    for (const auto& e : edges) unequal += static_cast<int>(((bits >> e.u) ^ (bits >> e.v)) & 1U);
    const int magnetization = n - 2 * std::popcount(bits);
    diag_[static_cast<std::size_t>(s)] = static_cast<double>(m - 2 * unequal) + b * magnetization;
  }
}

void HamiltonianOperator::apply(std::span<const double> x, std::span<double> y) const {
  require(x.size() == dim() && y.size() == dim(),
          "apply: vector length does not match 2^n = " + std::to_string(dim()));
  const int n = graph_.n();
  const double gamma = params_.gamma;
  const auto dim64 = static_cast<std::int64_t>(dim());
  const double* xs = x.data();
  double* ys = y.data();
  const double* d = diag_.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < dim64; ++s) {
    double flip = 0.0;
    for (int i = 0; i < n; ++i) flip += xs[s ^ (std::int64_t{1} << i)];
    ys[s] = d[s] * xs[s] + gamma * flip;
  }
}

StateVector HamiltonianOperator::apply(std::span<const double> x) const {
  StateVector y(dim());
  apply(x, y);
  return y;
}

double HamiltonianOperator::norm_bound() const {
  const double n = graph_.n();
  return static_cast<double>(graph_.edge_count()) + std::abs(params_.b) * n +
         std::abs(params_.gamma) * n;
}

void apply_derivative(int n, const ScheduleDerivative& d, std::span<const double> x,
                      std::span<double> y) {
  const auto dim = std::int64_t{1} << n;
  require(static_cast<std::int64_t>(x.size()) == dim && static_cast<std::int64_t>(y.size()) == dim,
          "apply_derivative: vector length does not match 2^n");
  const double* xs = x.data();
  double* ys = y.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < dim; ++s) {
    const int magnetization = n - 2 * std::popcount(static_cast<std::uint64_t>(s));
    double flip = 0.0;
    for (int i = 0; i < n; ++i) flip += xs[s ^ (std::int64_t{1} << i)];
    ys[s] = d.db * magnetization * xs[s] + d.dgamma * flip;
  }
}

StateVector apply_derivative(int n, const ScheduleDerivative& d, std::span<const double> x) {
  StateVector y(x.size());
  apply_derivative(n, d, x, y);
  return y;
}

}  // namespace spinlat
