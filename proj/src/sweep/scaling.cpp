#include <cmath>

#include "spinlat/errors.hpp"
#include "spinlat/observables.hpp"
#include "spinlat/sweep.hpp"

namespace spinlat {

std::pair<double, double> golden_extremum(const std::function<double(double)>& f, double lo,
                                          double hi, bool maximize, int steps) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto score = [&](double x) { return maximize ? -f(x) : f(x); };
  double a = std::min(lo, hi);
  double b = std::max(lo, hi);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = score(c);
  double fd = score(d);
  for (int i = 0; i < steps; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = score(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = score(d);
    }
  }
  const double x = fc < fd ? c : d;
  const double best = fc < fd ? fc : fd;
  return {x, maximize ? -best : best};
}

namespace {

double level_gap(const SpectrumResult& s, int gap_index) {
  return s.eigenvalues[static_cast<std::size_t>(gap_index - 1)] - s.eigenvalues[0];
}

// Grid extremum of value(row, spectrum), refined by golden section between
// the neighbouring grid points. Returns (gamma, value).
template <class Value>
std::pair<double, double> refined_extremum(const Graph& g, double b,
                                           const std::vector<double>& gamma_grid,
                                           const ScalingOptions& options, bool maximize,
                                           Value value) {
  require(gamma_grid.size() >= 3, "scaling: gamma grid needs at least three points");
  std::vector<double> values;
  std::vector<std::vector<StateVector>> vectors;
  std::vector<StateVector> previous;
  for (double gamma : gamma_grid) {
    SpectrumResult s;
    SweepRow row;
    try {
      row = observe(g, {b, gamma}, options.scan, &s,
                    options.scan.warm_start && !previous.empty() ? &previous : nullptr);
    } catch (const Error& err) {
      throw ScanFailure(err, b, gamma);
    }
    values.push_back(value(row, s));
    previous = s.eigenvectors;
    vectors.push_back(std::move(s.eigenvectors));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (maximize ? values[i] > values[best] : values[i] < values[best]) best = i;
  }
  if (best == 0 || best + 1 == values.size()) {
    fail(ErrorKind::no_interior_extremum,
         "scaling: extremum at the grid boundary for n=" + std::to_string(g.n()) +
             " (gamma=" + std::to_string(gamma_grid[best]) + ")");
  }
  if (options.refine_steps <= 0) return {gamma_grid[best], values[best]};

  const auto& warm = vectors[best];
  auto f = [&](double gamma) {
    SpectrumResult s;
    SweepRow row;
    try {
      row = observe(g, {b, gamma}, options.scan, &s, &warm);
    } catch (const Error& err) {
      throw ScanFailure(err, b, gamma);
    }
    return value(row, s);
  };
  auto [x, fx] = golden_extremum(f, gamma_grid[best - 1], gamma_grid[best + 1], maximize,
                                 options.refine_steps);
  // never report something worse than the grid point itself
  const bool better = maximize ? fx >= values[best] : fx <= values[best];
  return better ? std::pair{x, fx} : std::pair{gamma_grid[best], values[best]};
}

}  // namespace

GapScaling fit_gap_models(std::vector<GapScalingPoint> points, int gap_index) {
  GapScaling out;
  out.gap_index = gap_index;
  std::vector<double> xs, ys;
  for (const auto& p : points) {
    if (!(p.gap > 0.0)) {
      fail(ErrorKind::log_domain, "gap_scaling_fit: non-positive gap " + std::to_string(p.gap) +
                                      " at n=" + std::to_string(p.n));
    }
    xs.push_back(p.n);
    ys.push_back(p.gap);
  }
  out.points = std::move(points);
  out.exp_fit = fit_exp_decay(xs, ys);
  out.pow_fit = fit_power_law(xs, ys);
  return out;
}

GapScaling gap_scaling_fit(const GraphFamily& family, const std::vector<int>& sizes, double b,
                           const std::vector<double>& gamma_grid, const ScalingOptions& options) {
  require(sizes.size() >= 3, "gap_scaling_fit needs at least three sizes");
  require(options.gap_index >= 2 && options.gap_index <= 16, "gap index must lie in [2, 16]");
  ScalingOptions opts = options;
  opts.scan.k = std::max(opts.scan.k, options.gap_index);
  std::vector<GapScalingPoint> points;
  for (int n : sizes) {
    const Graph g = family.make(n);
    auto [gamma, gap] = refined_extremum(
        g, b, gamma_grid, opts, false,
        [&](const SweepRow&, const SpectrumResult& s) { return level_gap(s, options.gap_index); });
    points.push_back({n, gamma, gap});
  }
  return fit_gap_models(std::move(points), options.gap_index);
}

std::vector<EntropyScalingRow> entropy_scaling(const GraphFamily& family,
                                               const std::vector<int>& sizes, double b,
                                               const std::vector<double>& gamma_grid,
                                               const ScalingOptions& options) {
  std::vector<EntropyScalingRow> rows;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    require(sizes[i] % 2 == 0, "entropy_scaling: sizes must be even");
    require(i == 0 || sizes[i] > sizes[i - 1], "entropy_scaling: sizes must be ascending");
  }
  for (int n : sizes) {
    const Graph g = family.make(n);
    auto [gamma, s_max] = refined_extremum(
        g, b, gamma_grid, options, true,
        [](const SweepRow& row, const SpectrumResult&) { return row.entropy_half; });
    rows.push_back({n, gamma, s_max, s_max / n});
  }
  return rows;
}

}  // namespace spinlat
