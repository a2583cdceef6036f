#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "spinlat/errors.hpp"
#include "spinlat/lattice.hpp"

namespace spinlat {

FrustrationReport frustration(const Graph& g, double b) {
  const int n = g.n();
  if (n > 26) {
    fail(ErrorKind::budget_exceeded,
         "frustration: exhaustive scan limited to n <= 26, got n=" + std::to_string(n));
  }
  const auto adj = g.adjacency();

  // Gray-code walk; bit i set means z_i = -1. Start: all spins +1, every edge
  // violated and magnetization n.
  std::vector<int> spin(n, 1);
  int violations = static_cast<int>(g.edge_count());
  int magnetization = n;
  int min_violations = violations;

  // Energies are integers plus b times an integer magnetization; compare on
  // the (bond energy, magnetization) pair so ties are exact.
  auto energy = [&](int viol, int mag) {
    const int bond = 2 * viol - static_cast<int>(g.edge_count());
    return static_cast<double>(bond) + b * mag;
  };
  double min_energy = energy(violations, magnetization);
  std::uint64_t degeneracy = 1;
  int best_viol = violations;
  int best_mag = magnetization;

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int i = std::countr_zero(step);
    int equal_neighbours = 0;
    for (int w : adj[i]) equal_neighbours += (spin[w] == spin[i]) ? 1 : 0;
    // flipping i turns equal neighbours into unequal ones and vice versa
    violations += static_cast<int>(adj[i].size()) - 2 * equal_neighbours;
    magnetization -= 2 * spin[i];
    spin[i] = -spin[i];

    if (violations < min_violations) min_violations = violations;
    if (violations == best_viol && magnetization == best_mag) {
      ++degeneracy;
      continue;
    }
    const double e = energy(violations, magnetization);
    if (e < min_energy) {
      min_energy = e;
      best_viol = violations;
      best_mag = magnetization;
      degeneracy = 1;
    } else if (e == min_energy) {
      // distinct (viol, mag) pair at exactly the same energy (rational b)
      ++degeneracy;
    }
  }

  FrustrationReport report;
  report.bipartite = is_bipartite(g);
  report.min_violations = min_violations;
  report.classical_degeneracy = degeneracy;
  report.min_energy = min_energy;
  report.b = b;
  return report;
}

}  // namespace spinlat
