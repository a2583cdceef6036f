// Acceptance checks. Each criterion prints one PASS/FAIL line; the exit status
// is non-zero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "spinlat/cli.hpp"
#include "spinlat/eigensolver.hpp"
#include "spinlat/enumerate.hpp"
#include "spinlat/lattice.hpp"
#include "spinlat/observables.hpp"
#include "spinlat/sweep.hpp"

using namespace spinlat;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

std::string g6(double x) { return fmt("%.6g", x); }

bool within(double x, double lo, double hi) { return x >= lo && x <= hi; }

std::size_t argmax(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

std::size_t argmin(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

Verdict eigensolver_oracle() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  double worst = 0.0;
  int cases = 0;
  for (int n = 4; n <= 10; n += 2) {
    for (const auto& g : enumerate_cubic(n, true)) {
      for (int trial = 0; trial < 20; ++trial) {
        const FieldParams p{u(rng), u(rng)};
        const auto h = build(g, p);
        const auto dense = dense_spectrum(h);
        LanczosOptions o;
        o.k = 6;
        o.seed = static_cast<std::uint64_t>(trial + 1);
        const auto s = lowest_eigenpairs(h, o);
        for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(s.eigenvalues[i] - dense.eigenvalues[i]));
        ++cases;
      }
    }
  }
  return {worst <= 1e-9, std::to_string(cases) + " (graph, B, Gamma) cases, max |dE| = " + g6(worst) +
                             " (tol 1e-9)"};
}

Verdict partial_trace_oracle() {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    std::vector<double> psi(std::size_t{1} << n);
    double norm = 0.0;
    for (auto& x : psi) {
      x = normal(rng);
      norm += x * x;
    }
    for (auto& x : psi) x /= std::sqrt(norm);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    VertexSet block(all.begin(), all.begin() + size);
    std::sort(block.begin(), block.end());
    const auto rho = reduced_density(psi, block, n);
    const auto expected = oracle::outer_product_partial_trace(psi, block, n);
    worst = std::max(worst, (rho.matrix - expected).cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-12, "100 random states (n <= 8), max elementwise error " + g6(worst) + " (tol 1e-12)"};
}

Verdict frustration_counts() {
  const auto f18 = frustration(ladder_on_circle(18));
  const auto f16 = frustration(ladder_on_circle(16));
  const bool ok = f18.min_violations == 2 && f16.min_violations == 0 && f16.classical_degeneracy == 2;
  return {ok, "N=18 min_violations=" + std::to_string(f18.min_violations) +
                  "; N=16 min_violations=" + std::to_string(f16.min_violations) +
                  " classical_degeneracy=" + std::to_string(f16.classical_degeneracy)};
}

SweepTable ladder16_b1() {
  ScanOptions o;
  o.k = 4;
  o.block = ladder_inner_ring(16);
  return scan_line(ladder_on_circle(16), 1.0, make_grid(3.0, 0.0, 0.05), o);
}

Verdict critical_point() {
  const auto t = ladder16_b1();
  const auto s = find_critical(t, Criterion::entropy_peak);
  const auto d = find_critical(t, Criterion::gap13_min);
  const bool s_ok = within(s.gamma_c, 1.65, 1.95);
  const bool d_ok = within(d.gamma_c, 1.65, 1.95);
  const bool agree = std::abs(s.gamma_c - d.gamma_c) <= 2 * 0.05 + 1e-12;
  return {s_ok && d_ok && agree,
          "entropy peak Gamma_c=" + g6(s.gamma_c) + (s_ok ? " in" : " NOT in") +
              " [1.65, 1.95]; Delta13 min Gamma_c=" + g6(d.gamma_c) + (d_ok ? " in" : " NOT in") +
              " [1.65, 1.95]; |difference|=" + g6(std::abs(s.gamma_c - d.gamma_c)) +
              (agree ? " <=" : " >") + " 2 grid steps"};
}

Verdict critical_line() {
  ScanOptions o;
  o.k = 3;
  const auto line = critical_line_fit(ladder_on_circle(16), make_grid(0.0, 2.0, 0.25),
                                      make_grid(3.0, 0.0, 0.05), Criterion::gap13_min, o);
  const auto& c = line.fit.coefficients;
  const bool ok = std::abs(c[0] - 1.939) <= 0.1;
  std::string detail = "Gamma_c(B) = " + g6(c[0]) + " + " + g6(c[1]) + " B + " + g6(c[2]) + " B^2 + " +
                       g6(c[3]) + " B^3 from " + std::to_string(line.b.size()) +
                       " points; constant within 0.1 of 1.939: " + (ok ? "yes" : "no");
  if (!line.skipped_b.empty()) detail += "; skipped " + std::to_string(line.skipped_b.size()) + " B values";
  return {ok, detail};
}

Verdict entropy_scaling_check(bool long_run) {
  ScalingOptions o;
  o.scan.k = 2;
  o.refine_steps = 14;
  std::vector<int> sizes{12, 16, 20};
  if (long_run) sizes.push_back(24);
  if (long_run) o.scan.build.override_budget = true;
  const auto rows = entropy_scaling(GraphFamily::ladder_even(long_run ? 24 : 20), sizes, 1.0,
                                    make_grid(3.0, 0.5, 0.1), o);
  bool monotone = true;
  std::string detail = "S_max/N:";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    detail += " N=" + std::to_string(rows[i].n) + ":" + g6(rows[i].s_per_site) + "@" + g6(rows[i].gamma_at_max);
    if (i > 0 && rows[i].s_per_site < rows[i - 1].s_per_site) monotone = false;
  }
  const double s20 = rows[2].s_per_site;
  const bool band = within(s20, 0.05, 0.11);
  detail += std::string("; non-decreasing: ") + (monotone ? "yes" : "no") + "; N=20 in [0.05, 0.11]: " +
            (band ? "yes" : "no");
  return {monotone && band, detail};
}

Verdict majorization_arrow() {
  ScanOptions o;
  o.k = 4;
  o.block = ladder_inner_ring(16);
  const auto t = scan_line(ladder_on_circle(16), 1.0, make_grid(3.0, 0.4, 0.05), o);
  double worst = 0.0;
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    for (int l = 0; l < 5; ++l) worst = std::min(worst, t.rows[i].c_z[l] - t.rows[i - 1].c_z[l]);
  }
  return {worst >= -1e-6, std::to_string(t.rows.size()) + " grid points on [0.4, 3.0]; largest decrease of any c_l (l<=5) " +
                              "as Gamma decreases: " + g6(std::max(0.0, -worst)) + " (tol 1e-6)"};
}

Verdict forbidden_matrix_element() {
  const Graph g = ladder_on_circle(12);
  ScanOptions o;
  o.k = 4;
  const auto t = scan_line(g, 1.0, make_grid(3.0, 0.0, 0.05), o);
  const double gamma_c = find_critical(t, Criterion::entropy_peak).gamma_c;
  const auto h = build(g, {1.0, gamma_c});
  const auto s = lowest_eigenpairs(h, 4, 1e-11, 1);
  const ScheduleDerivative d{0.0, 1.0};
  const double n2 = adiabatic_numerator(h, d, s, 2);
  const double n3 = adiabatic_numerator(h, d, s, 3);
  return {n2 <= 1e-8 && n3 > 1e-4, "N=12 at Gamma_c=" + g6(gamma_c) + ": |<e2|dH|e1>|=" + g6(n2) +
                                        " (<= 1e-8), |<e3|dH|e1>|=" + g6(n3) + " (> 1e-4)"};
}

Verdict dual_gap_fit() {
  ScalingOptions o;
  o.scan.k = 3;
  o.refine_steps = 30;
  const auto fit = gap_scaling_fit(GraphFamily::ladder_even(), {8, 12, 16}, 1.0, make_grid(3.0, 0.5, 0.05), o);
  const double re = fit.exp_fit.rms_residual;
  const double rp = fit.pow_fit.rms_residual;
  const double ratio = std::max(re, rp) / std::max(std::min(re, rp), 1e-300);
  bool ok = ratio <= 3.0;

  std::vector<GapScalingPoint> exp_pts;
  std::vector<GapScalingPoint> pow_pts;
  for (int n : {8, 12, 16}) {
    exp_pts.push_back({n, 1.0, 2.5 * std::exp(-0.11 * n)});
    pow_pts.push_back({n, 1.0, 9.0 * std::pow(n, -0.8)});
  }
  const auto se = fit_gap_models(exp_pts, 3);
  const auto sp = fit_gap_models(pow_pts, 3);
  const bool exp_wins = se.exp_fit.rms_residual * 1e6 <= se.pow_fit.rms_residual;
  const bool pow_wins = sp.pow_fit.rms_residual * 1e6 <= sp.exp_fit.rms_residual;
  ok = ok && exp_wins && pow_wins;
  std::string detail = "ladders {8,12,16}: min Delta13 =";
  for (const auto& p : fit.points) detail += " " + g6(p.gap);
  detail += "; rms exp=" + g6(re) + " pow=" + g6(rp) + " ratio=" + g6(ratio) + " (<= 3); synthetic: exp data " +
            g6(se.exp_fit.rms_residual) + " vs " + g6(se.pow_fit.rms_residual) + ", power data " +
            g6(sp.pow_fit.rms_residual) + " vs " + g6(sp.exp_fit.rms_residual) + " (>= 1e6 separation: " +
            (exp_wins && pow_wins ? "yes" : "no") + ")";
  return {ok, detail};
}

Verdict enumeration_counts(bool long_run) {
  const std::size_t c4 = enumerate_cubic(4).size();
  const std::size_t c6 = enumerate_cubic(6).size();
  const std::size_t p6 = enumerate_cubic(6, true).size();
  const std::size_t o4 = oracle::brute_connected_cubic_classes(4, false).size();
  const std::size_t o6 = oracle::brute_connected_cubic_classes(6, false).size();
  const std::size_t op6 = oracle::brute_connected_cubic_classes(6, true).size();
  bool ok = c4 == 1 && c6 == 2 && p6 == 1 && c4 == o4 && c6 == o6 && p6 == op6;
  std::string detail = "n=4: " + std::to_string(c4) + " (oracle " + std::to_string(o4) + "), n=6: " +
                       std::to_string(c6) + " (oracle " + std::to_string(o6) + "), n=6 planar: " +
                       std::to_string(p6) + " (oracle " + std::to_string(op6) + ")";
  if (long_run) {
    EnumerateOptions e;
    e.planar_only = true;
    e.min_connectivity = 3;
    e.long_run = true;
    const std::size_t p18 = enumerate_cubic(18, e).size();
    ok = ok && p18 == 1249;
    detail += "; n=18 planar 3-connected: " + std::to_string(p18) + " (expected 1249)";
  } else {
    detail += "; n=18 target runs only with --long-run";
  }
  return {ok, detail};
}

Verdict ensemble_coincidence() {
  const auto graphs = enumerate_cubic(8, true);
  const auto grid = make_grid(3.0, 0.0, 0.05);
  EnsembleOptions o;
  o.scan.k = 4;
  const auto t = ensemble_average(graphs, 0.5, grid, 1, o);
  std::vector<double> d13;
  std::vector<double> s;
  std::vector<double> crho;
  for (const auto& r : t.rows) {
    d13.push_back(r.delta13);
    s.push_back(r.entropy_half / 8.0);
    crho.push_back(r.c_rho[0]);
  }
  std::size_t rise = 1;
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    const double step = t.rows[i].c_z[0] - t.rows[i - 1].c_z[0];
    if (step > t.rows[rise].c_z[0] - t.rows[rise - 1].c_z[0]) rise = i;
  }
  const std::vector<double> where{grid[argmin(d13)], grid[argmax(s)], 0.5 * (grid[rise] + grid[rise - 1]),
                                  grid[argmin(crho)]};
  const double spread = *std::max_element(where.begin(), where.end()) -
                        *std::min_element(where.begin(), where.end());
  const std::size_t d_at = argmin(d13);
  const bool interior = d_at > 0 && d_at + 1 < grid.size();
  return {spread <= 3 * 0.05 + 1e-12,
          std::to_string(graphs.size()) + " planar n=8 graphs at B=0.5: Delta13 min @" + g6(where[0]) +
              ", S/N peak @" + g6(where[1]) + ", c1_z rise @" + g6(where[2]) + ", c1_rho min @" +
              g6(where[3]) + "; spread " + g6(spread) + " (<= 3 grid steps = 0.15)" +
              (interior ? "" : "; note: the Delta13 minimum is at the grid end, so the markers meet at the "
                               "classical end of the scan, not at an interior transition")};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "spinlat_acceptance";
  std::filesystem::create_directories(dir);
  std::ostringstream sink;
  auto run = [&](std::vector<std::string> args) { return cli::run(args, sink, sink); };
  const std::vector<std::pair<std::string, std::vector<std::string>>> jobs{
      {"sweep", {"sweep", "--graph", "ladder:12", "--b", "1", "--gamma", "3:0:0.1", "--block", "random:7",
                 "--seed", "5"}},
      {"ensemble", {"ensemble", "--graphs", "enum:8", "--b", "0.5", "--gamma", "2:0.5:0.25",
                    "--ensemble-seed", "11"}}};
  bool ok = true;
  std::string detail;
  for (const auto& [name, args] : jobs) {
    const auto a = dir / (name + "_a.csv");
    const auto b = dir / (name + "_b.csv");
    const auto c = dir / (name + "_replay.csv");
    auto first = args;
    first.insert(first.end(), {"-o", a.string()});
    auto second = args;
    second.insert(second.end(), {"-o", b.string(), "--workers", "2"});
    const bool ran = run(first) == 0 && run(second) == 0 &&
                     run({"replay", "--manifest", a.string() + ".manifest", "-o", c.string()}) == 0;
    const std::string ta = slurp(a);
    const bool same = ran && !ta.empty() && ta == slurp(b) && ta == slurp(c);
    ok = ok && same;
    detail += name + ": repeated (1 and 2 workers) and replayed CSVs " + (same ? "byte-identical" : "DIFFER") + "; ";
  }
  return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::vector<int> selected;
  bool long_run = false;
  app.add_option("--criterion", selected, "criterion number (repeatable; default all)")->check(CLI::Range(1, 12));
  app.add_flag("--long-run", long_run, "include long-run targets");
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) {
    for (int i = 1; i <= 12; ++i) selected.push_back(i);
  }

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"oracle equivalence, eigensolver", eigensolver_oracle},
      {"oracle equivalence, partial trace", partial_trace_oracle},
      {"frustration counts", frustration_counts},
      {"critical point, N=16 ladder at B=1", critical_point},
      {"critical line constant term", critical_line},
      {"entropy scaling", [&] { return entropy_scaling_check(long_run); }},
      {"majorization arrow", majorization_arrow},
      {"symmetry-forbidden matrix element", forbidden_matrix_element},
      {"dual-model gap fit", dual_gap_fit},
      {"enumeration counts", [&] { return enumeration_counts(long_run); }},
      {"ensemble coincidence", ensemble_coincidence},
      {"determinism", determinism},
  };

  int failures = 0;
  for (int id : selected) {
    const auto& [name, check] = criteria[static_cast<std::size_t>(id - 1)];
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << id << " (" << name << "): " << v.detail
              << " [" << fmt("%.1f", seconds) << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
