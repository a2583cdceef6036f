#include <cmath>
#include <limits>

#include "spinlat/errors.hpp"
#include "spinlat/observables.hpp"
#include "spinlat/sweep.hpp"

namespace spinlat {

namespace {

std::string point_message(const Error& cause, double b, double gamma) {
  return "at b=" + std::to_string(b) + " gamma=" + std::to_string(gamma) + ": " + cause.what();
}

}  // namespace

ScanFailure::ScanFailure(const Error& cause, double b, double gamma)
    : Error(cause.kind(), point_message(cause, b, gamma)), b_(b), gamma_(gamma) {}

std::vector<double> make_grid(double start, double stop, double step) {
  require(step > 0.0 && std::isfinite(step), "grid step must be positive");
  require(std::isfinite(start) && std::isfinite(stop), "grid bounds must be finite");
  const double span = std::abs(stop - start);
  const auto intervals = static_cast<long>(std::floor(span / step + 0.5 + 1e-9));
  require(intervals < 1000000, "grid has too many points");
  const double direction = stop >= start ? 1.0 : -1.0;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(intervals + 1));
  for (long i = 0; i <= intervals; ++i) {
    // snap to 1e-12 so printed grids read 1.8 rather than 1.7999999999999998
    const double raw = start + direction * step * static_cast<double>(i);
    grid.push_back(std::round(raw * 1e12) / 1e12);
  }
  return grid;
}

SweepRow observe(const Graph& g, FieldParams p, const ScanOptions& options,
                 SpectrumResult* spectrum_out, const std::vector<StateVector>* warm) {
  require(options.k >= 2, "scan needs k >= 2");
  const int n = g.n();
  require(n >= 2, "scan needs at least two spins");
  HamiltonianOperator h(g, p, options.build);

  LanczosOptions lanczos;
  lanczos.k = std::min<int>(options.k, static_cast<int>(h.dim()));
  lanczos.tol = options.tol;
  lanczos.seed = options.seed;
  lanczos.degeneracy_tol = options.degeneracy_tol;
  lanczos.max_matvecs = options.max_matvecs;
  if (warm != nullptr) lanczos.start = *warm;
  SpectrumResult spectrum = lowest_eigenpairs(h, lanczos);

  SweepRow row;
  row.b = p.b;
  row.gamma = p.gamma;
  const auto& e = spectrum.eigenvalues;
  row.e1 = e[0];
  row.delta12 = std::max(0.0, e[1] - e[0]);
  row.delta13 = e.size() >= 3 ? std::max(0.0, e[2] - e[0]) : std::numeric_limits<double>::quiet_NaN();
  row.degeneracy_flag = row.delta12 <= options.flag_tol * std::max(1.0, std::abs(e[0]));
  row.ground_cluster = spectrum.ground_cluster_size();

  const auto& psi = spectrum.eigenvectors[0];
  VertexSet half = options.block;
  if (half.empty()) {
    for (int v = 0; v < n / 2; ++v) half.push_back(v);
  }
  require(options.single_site >= 0 && options.single_site < n, "single_site out of range");
  const auto single_spec = rho_spectrum(reduced_density(psi, {options.single_site}, n));
  row.entropy_single = entropy_of_spectrum(single_spec);

  const auto half_spec = rho_spectrum(reduced_density(psi, half, n));
  row.entropy_half = entropy_of_spectrum(half_spec);
  const int m_rho = std::min<int>(options.m, static_cast<int>(half_spec.size()));
  row.c_rho = cumulants_of_spectrum(half_spec, m_rho).values;
  row.c_z = ground_cumulants(psi, std::min<int>(options.m, static_cast<int>(psi.size()))).values;

  if (spectrum_out != nullptr) *spectrum_out = std::move(spectrum);
  return row;
}

SweepTable scan_line(const Graph& g, double b, const std::vector<double>& gamma_grid,
                     const ScanOptions& options) {
  require(!gamma_grid.empty(), "scan_line: empty gamma grid");
  if (gamma_grid.size() > 1) {
    const bool descending = gamma_grid[1] < gamma_grid[0];
    for (std::size_t i = 1; i < gamma_grid.size(); ++i) {
      const bool ok = descending ? gamma_grid[i] < gamma_grid[i - 1] : gamma_grid[i] > gamma_grid[i - 1];
      require(ok, "scan_line: gamma grid must be strictly monotone");
    }
  }
  SweepTable table;
  table.m = options.m;
  table.warm_started = options.warm_start;
  std::vector<StateVector> previous;
  for (double gamma : gamma_grid) {
    SpectrumResult spectrum;
    try {
      const std::vector<StateVector>* warm =
          (options.warm_start && !previous.empty()) ? &previous : nullptr;
      table.rows.push_back(observe(g, {b, gamma}, options, &spectrum, warm));
    } catch (const Error& err) {
      throw ScanFailure(err, b, gamma);
    }
    if (options.warm_start) previous = std::move(spectrum.eigenvectors);
  }
  return table;
}

}  // namespace spinlat
