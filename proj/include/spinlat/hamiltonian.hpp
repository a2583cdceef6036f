#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spinlat/graph.hpp"

namespace spinlat {

/// Longitudinal field b and transverse field gamma, in units of the coupling.
struct FieldParams {
  double b = 0.0;
  double gamma = 0.0;
};

/// Derivative of the fields along a schedule parameter s.
struct ScheduleDerivative {
  double db = 0.0;
  double dgamma = 0.0;
};

using StateVector = std::vector<double>;

struct BuildOptions {
  int max_n = 24;
  bool override_budget = false;
};

/// H = sum_<ij> Z_i Z_j + b sum_i Z_i + gamma sum_i X_i on 2^n basis states.
///
/// Bit i of a basis index is spin i; a clear bit means z_i = +1. The diagonal
/// is materialized, the X terms are applied on the fly (s <-> s ^ (1 << i)).
class HamiltonianOperator {
 public:
  HamiltonianOperator(const Graph& g, FieldParams params, BuildOptions options = {});

  const Graph& graph() const noexcept { return graph_; }
  const FieldParams& params() const noexcept { return params_; }
  int n() const noexcept { return graph_.n(); }
  std::size_t dim() const noexcept { return diag_.size(); }
  const std::vector<double>& diag() const noexcept { return diag_; }

  /// y = H x. Throws invalid-argument on size mismatch.
  void apply(std::span<const double> x, std::span<double> y) const;
  StateVector apply(std::span<const double> x) const;

  /// Bound on the spectral radius: |E| <= |edges| + |b| n + |gamma| n.
  double norm_bound() const;

 private:
  Graph graph_;
  FieldParams params_;
  std::vector<double> diag_;
};

/// z-spin of vertex i in basis state s.
inline int spin_z(std::uint64_t s, int i) { return ((s >> i) & 1U) ? -1 : 1; }

/// y = (db sum_i Z_i + dgamma sum_i X_i) x on n spins.
void apply_derivative(int n, const ScheduleDerivative& d, std::span<const double> x,
                      std::span<double> y);
StateVector apply_derivative(int n, const ScheduleDerivative& d, std::span<const double> x);

inline HamiltonianOperator build(const Graph& g, FieldParams p, BuildOptions options = {}) {
  return HamiltonianOperator(g, p, options);
}

}  // namespace spinlat
