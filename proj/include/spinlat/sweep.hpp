#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "spinlat/eigensolver.hpp"
#include "spinlat/errors.hpp"
#include "spinlat/fit.hpp"
#include "spinlat/graph.hpp"
#include "spinlat/hamiltonian.hpp"
#include "spinlat/lattice.hpp"

namespace spinlat {

struct SweepRow {
  double b = 0.0;
  double gamma = 0.0;
  double e1 = 0.0;
  double delta12 = 0.0;
  double delta13 = 0.0;
  double entropy_single = 0.0;
  double entropy_half = 0.0;
  std::vector<double> c_z;
  std::vector<double> c_rho;
  /// Ground state is (near-)degenerate: E2 - E1 <= flag_tol * max(1, |E1|).
  bool degeneracy_flag = false;
  /// Size of the ground-state degeneracy class at the solver tolerance.
  int ground_cluster = 1;
};

struct SweepTable {
  std::vector<SweepRow> rows;
  int m = 5;
  bool warm_started = true;
};

struct ScanOptions {
  int k = 4;
  int m = 5;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  double degeneracy_tol = 1e-8;
  double flag_tol = 1e-6;
  /// Kept block for entropy_half and c_rho; empty means vertices 0..n/2-1
  /// (the inner ring of a ladder).
  VertexSet block;
  int single_site = 0;
  bool warm_start = true;
  long max_matvecs = 0;
  BuildOptions build;
};

/// Grid point that failed inside a scan.
class ScanFailure : public Error {
 public:
  ScanFailure(const Error& cause, double b, double gamma);
  double b() const noexcept { return b_; }
  double gamma() const noexcept { return gamma_; }

 private:
  double b_;
  double gamma_;
};

/// Spectrum and observables at one point.
SweepRow observe(const Graph& g, FieldParams p, const ScanOptions& options,
                 SpectrumResult* spectrum_out = nullptr,
                 const std::vector<StateVector>* warm = nullptr);

/// One row per grid point, in grid order. With warm_start the solver starts
/// from the previous point's eigenvectors.
SweepTable scan_line(const Graph& g, double b, const std::vector<double>& gamma_grid,
                     const ScanOptions& options = {});

enum class Criterion { entropy_peak, gap13_min };

const char* to_string(Criterion c);

struct CriticalPoint {
  double gamma_c = 0.0;
  double quality = 0.0;
  std::size_t index = 0;
};

/// Extremal row refined by a parabola through it and its two neighbours.
/// Throws no-interior-extremum when the extremum sits on the table boundary.
CriticalPoint find_critical(const SweepTable& t, Criterion criterion);

/// Column used by a criterion (entropy_half or delta13).
double criterion_value(const SweepRow& row, Criterion criterion);

struct CriticalLine {
  std::vector<double> b;
  std::vector<double> gamma_c;
  std::vector<double> quality;
  std::vector<double> skipped_b;  // no interior extremum on the grid
  FitResult fit;
};

CriticalLine critical_line_fit(const Graph& g, const std::vector<double>& b_grid,
                               const std::vector<double>& gamma_grid, Criterion criterion,
                               const ScanOptions& options = {});

struct ScalingOptions {
  /// 1-based level whose gap to the ground state is tracked (3: Delta_13).
  int gap_index = 3;
  /// Golden-section steps refining the grid extremum; 0 keeps the grid value.
  int refine_steps = 40;
  ScanOptions scan;
};

struct GapScalingPoint {
  int n = 0;
  double gamma_at_min = 0.0;
  double gap = 0.0;
};

struct GapScaling {
  int gap_index = 3;
  std::vector<GapScalingPoint> points;
  FitResult exp_fit;
  FitResult pow_fit;
};

/// Fits both scaling models to (N, min_gamma gap) pairs; no model is preferred.
GapScaling fit_gap_models(std::vector<GapScalingPoint> points, int gap_index);

GapScaling gap_scaling_fit(const GraphFamily& family, const std::vector<int>& sizes, double b,
                           const std::vector<double>& gamma_grid,
                           const ScalingOptions& options = {});

struct EntropyScalingRow {
  int n = 0;
  double gamma_at_max = 0.0;
  double s_max = 0.0;
  double s_per_site = 0.0;
};

/// Peak over gamma of the entropy of the block (default: first n/2
/// vertices, i.e. one ring of a ladder) for each size.
std::vector<EntropyScalingRow> entropy_scaling(const GraphFamily& family,
                                               const std::vector<int>& sizes, double b,
                                               const std::vector<double>& gamma_grid,
                                               const ScalingOptions& options = {});

/// Golden-section search for the extremum of f on [lo, hi]; returns (x, f(x)).
std::pair<double, double> golden_extremum(const std::function<double(double)>& f, double lo,
                                          double hi, bool maximize, int steps);

/// Random single site and connected n/2 block used for one ensemble member.
struct EnsembleDraw {
  int site = 0;
  VertexSet block;
};

EnsembleDraw ensemble_draw(const Graph& g, std::uint64_t seed);

struct EnsembleOptions {
  ScanOptions scan;
  /// Parallel workers over graphs; 0 uses the runtime default.
  int workers = 0;
};

/// Per-grid-point averages over graphs of equal size. Each graph gets a
/// random single site and a random connected n/2 block drawn from a seed
/// derived from (seed, graph); averages are reduced in canonical graph order.
SweepTable ensemble_average(const std::vector<Graph>& graphs, double b,
                            const std::vector<double>& gamma_grid, std::uint64_t seed,
                            const EnsembleOptions& options = {});

/// Grid helper: start, start - step, ... down to stop (inclusive within
/// half a step). Accepts ascending ranges too.
std::vector<double> make_grid(double start, double stop, double step);

}  // namespace spinlat
