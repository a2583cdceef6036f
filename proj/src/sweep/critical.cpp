#include <cmath>

#include "spinlat/errors.hpp"
#include "spinlat/sweep.hpp"

namespace spinlat {

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::entropy_peak: return "entropy_peak";
    case Criterion::gap13_min: return "gap13_min";
  }
  return "unknown";
}

double criterion_value(const SweepRow& row, Criterion criterion) {
  return criterion == Criterion::entropy_peak ? row.entropy_half : row.delta13;
}

CriticalPoint find_critical(const SweepTable& t, Criterion criterion) {
  require(t.rows.size() >= 3, "find_critical needs at least three rows");
  const bool maximize = criterion == Criterion::entropy_peak;
  std::size_t best = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double v = criterion_value(t.rows[i], criterion);
    require(std::isfinite(v), std::string("find_critical: ") + to_string(criterion) +
                                  " column is not finite (k < 3?)");
    const double current = criterion_value(t.rows[best], criterion);
    if (maximize ? v > current : v < current) best = i;
  }
  if (best == 0 || best + 1 == t.rows.size()) {
    fail(ErrorKind::no_interior_extremum,
         std::string("find_critical: ") + to_string(criterion) + " extremum lies on the grid boundary" +
             " (gamma=" + std::to_string(t.rows[best].gamma) + ")");
  }
  const double x0 = t.rows[best - 1].gamma;
  const double x1 = t.rows[best].gamma;
  const double x2 = t.rows[best + 1].gamma;
  const double y0 = criterion_value(t.rows[best - 1], criterion);
  const double y1 = criterion_value(t.rows[best], criterion);
  const double y2 = criterion_value(t.rows[best + 1], criterion);

  // vertex of the parabola through the three points
  const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
  const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
  double xc = x1;
  if (den != 0.0) xc = x1 - 0.5 * num / den;
  // the vertex stays between the neighbours for a genuine interior extremum
  const double lo = std::min(x0, x2);
  const double hi = std::max(x0, x2);
  if (!(xc >= lo && xc <= hi)) xc = x1;

  CriticalPoint cp;
  cp.gamma_c = xc;
  cp.quality = std::abs(y1 - 0.5 * (y0 + y2));
  cp.index = best;
  return cp;
}

CriticalLine critical_line_fit(const Graph& g, const std::vector<double>& b_grid,
                               const std::vector<double>& gamma_grid, Criterion criterion,
                               const ScanOptions& options) {
  CriticalLine line;
  for (double b : b_grid) {
    const SweepTable table = scan_line(g, b, gamma_grid, options);
    try {
      const CriticalPoint cp = find_critical(table, criterion);
      line.b.push_back(b);
      line.gamma_c.push_back(cp.gamma_c);
      line.quality.push_back(cp.quality);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::no_interior_extremum) throw;
      line.skipped_b.push_back(b);
    }
  }
  if (line.b.size() < 4) {
    fail(ErrorKind::underdetermined_fit,
         "critical_line_fit: only " + std::to_string(line.b.size()) +
             " field values produced an interior critical point; a cubic needs 4");
  }
  line.fit = fit_poly3(line.b, line.gamma_c);
  return line;
}

}  // namespace spinlat
