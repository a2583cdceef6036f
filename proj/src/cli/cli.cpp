#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spinlat/cli.hpp"
#include "spinlat/eigensolver.hpp"
#include "spinlat/enumerate.hpp"
#include "spinlat/errors.hpp"
#include "spinlat/lattice.hpp"
#include "spinlat/observables.hpp"
#include "spinlat/planarity.hpp"

namespace spinlat::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument:
    case ErrorKind::parse:
      return kValidation;
    default:
      return kComputation;
  }
}

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::invalid_argument, "cannot write " + path);
  file << text;
}

// Options shared by every command that runs the eigensolver.
struct SolverArgs {
  int k = 4;
  int m = 5;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  double degeneracy_tol = 1e-8;
  double flag_tol = 1e-6;
  std::string block = "half";
  int site = 0;
  bool cold = false;
  long max_matvecs = 0;

  void add_to(CLI::App* sub) {
    sub->add_option("--k", k, "number of lowest levels")->check(CLI::Range(1, 64));
    sub->add_option("--m", m, "number of cumulants")->check(CLI::Range(1, 1 << 20));
    sub->add_option("--seed", seed, "solver start-vector seed");
    sub->add_option("--tol", tol, "eigensolver residual tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--degeneracy-tol", degeneracy_tol, "relative degeneracy tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--flag-tol", flag_tol, "near-degeneracy flag tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--block", block, "kept block: half|ring:inner|ring:outer|random:<seed>|list:...");
    sub->add_option("--site", site, "vertex for the single-site entropy")->check(CLI::NonNegativeNumber);
    sub->add_flag("--cold", cold, "restart the solver from random vectors at every grid point");
    sub->add_option("--max-matvecs", max_matvecs, "matvec budget per solve (0: default)");
  }

  ScanOptions scan(const Graph& g) const {
    ScanOptions o;
    o.k = k;
    o.m = m;
    o.seed = seed;
    o.tol = tol;
    o.degeneracy_tol = degeneracy_tol;
    o.flag_tol = flag_tol;
    o.block = resolve_block(block, g);
    o.single_site = site;
    o.warm_start = !cold;
    o.max_matvecs = max_matvecs;
    o.build.override_budget = budget_override_from_env();
    require(site < g.n(), "--site is outside the graph");
    return o;
  }
};

struct Args {
  std::string output;
  std::string graph;
  int workers = 0;
  bool long_run = false;
  SolverArgs solver;

  // gen / enum
  std::string family = "ladder";
  int n = 0;
  bool planar = false;
  bool three_connected = false;
  bool count_only = false;

  // physics
  double b = 0.0;
  double gamma = 1.0;
  std::string gamma_grid = "3:0:0.05";
  std::string b_grid = "0:2:0.25";
  std::string criterion = "gap13";
  double db = 0.0;
  double dgamma = 1.0;

  // scaling
  std::string sizes;
  std::string mode = "gap";
  int gap_index = 3;
  int refine_steps = 40;

  // ensemble
  std::uint64_t ensemble_seed = 1;

  // replay
  std::string manifest;
};

Graph single_graph(const Args& a) {
  auto records = resolve_graphs(a.graph, a.long_run || budget_override_from_env());
  require(records.size() == 1, "--graph must name exactly one graph (use file:<path>#<name>)");
  return records.front().graph;
}

std::string fit_report(const std::string& label, const FitResult& fit) {
  std::string out = label + ": " + describe(fit) + "\n";
  out += label + ".rms_residual=" + format_double(fit.rms_residual) + "\n";
  for (std::size_t i = 0; i < fit.coefficients.size(); ++i) {
    out += label + ".c" + std::to_string(i) + "=" + format_double(fit.coefficients[i]) + "\n";
  }
  return out;
}

// Each command returns the primary artifact text; the caller writes it to
// the output file (with a manifest) or to the output stream.
struct Artifact {
  std::string main;
  std::vector<std::pair<std::string, std::string>> extras;  // suffix, text
};

Artifact cmd_gen(const Args& a) {
  require(a.family == "ladder", "unknown generator family '" + a.family + "' (known: ladder)");
  return {save_graph("ladder_" + std::to_string(a.n), ladder_on_circle(a.n)), {}};
}

Artifact cmd_enum(const Args& a) {
  EnumerateOptions o;
  o.planar_only = a.planar;
  o.min_connectivity = a.three_connected ? 3 : 1;
  o.long_run = a.long_run || budget_override_from_env();
  const auto graphs = enumerate_cubic(a.n, o);
  if (a.count_only) return {std::to_string(graphs.size()) + "\n", {}};
  std::vector<GraphRecord> records;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    records.push_back({"cubic" + std::to_string(a.n) + "_" + std::to_string(i), graphs[i], {}});
  }
  std::string text = "# count=" + std::to_string(graphs.size()) + "\n" + save_graphs(records);
  return {text, {}};
}

Artifact cmd_frustration(const Args& a) {
  std::string out;
  for (const auto& r : resolve_graphs(a.graph, a.long_run || budget_override_from_env())) {
    const auto f = frustration(r.graph, a.b);
    out += "graph=" + r.name + " n=" + std::to_string(r.graph.n()) +
           " bipartite=" + (f.bipartite ? "true" : "false") +
           " min_violations=" + std::to_string(f.min_violations) +
           " classical_degeneracy=" + std::to_string(f.classical_degeneracy) +
           " min_energy=" + format_double(f.min_energy) + " b=" + format_double(f.b) + "\n";
  }
  return {out, {}};
}

Artifact cmd_solve(const Args& a) {
  const Graph g = single_graph(a);
  const ScanOptions o = a.solver.scan(g);
  SpectrumResult s;
  const SweepRow row = observe(g, {a.b, a.gamma}, o, &s);
  std::string out = "n=" + std::to_string(g.n()) + "\nb=" + format_double(a.b) +
                    "\ngamma=" + format_double(a.gamma) + "\n";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    out += "E" + std::to_string(i + 1) + "=" + format_double(s.eigenvalues[i]) + " residual=" +
           format_double(s.residuals[i]) + "\n";
  }
  out += "matvecs=" + std::to_string(s.matvecs) + "\n";
  out += "delta12=" + format_double(row.delta12) + "\ndelta13=" + format_double(row.delta13) + "\n";
  out += "entropy_single=" + format_double(row.entropy_single) +
         "\nentropy_half=" + format_double(row.entropy_half) + "\n";
  const auto rho = reduced_density(s.eigenvectors[0], o.block, g.n());
  out += "schmidt_rank=" + std::to_string(schmidt_rank(rho)) + "\n";
  for (std::size_t l = 0; l < row.c_z.size(); ++l) {
    out += "c_z" + std::to_string(l + 1) + "=" + format_double(row.c_z[l]) + "\n";
  }
  for (std::size_t l = 0; l < row.c_rho.size(); ++l) {
    out += "c_rho" + std::to_string(l + 1) + "=" + format_double(row.c_rho[l]) + "\n";
  }
  out += std::string("degeneracy_flag=") + (row.degeneracy_flag ? "1" : "0") + "\n";
  const auto h = build(g, {a.b, a.gamma}, o.build);
  for (int target = 2; target <= static_cast<int>(s.k()); ++target) {
    const double num = adiabatic_numerator(h, {a.db, a.dgamma}, s, target);
    out += "adiabatic_numerator" + std::to_string(target) + "=" + format_double(num) + "\n";
    try {
      out += "adiabatic_ratio" + std::to_string(target) + "=" +
             format_double(adiabatic_ratio(h, {a.db, a.dgamma}, s, target)) + "\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::degenerate_gap) throw;
      out += "adiabatic_ratio" + std::to_string(target) + "=degenerate\n";
    }
  }
  return {out, {}};
}

Artifact cmd_sweep(const Args& a) {
  const Graph g = single_graph(a);
  const auto table = scan_line(g, a.b, parse_grid(a.gamma_grid), a.solver.scan(g));
  return {sweep_csv(table), {}};
}

Criterion parse_criterion(const std::string& s) {
  if (s == "gap13") return Criterion::gap13_min;
  if (s == "entropy") return Criterion::entropy_peak;
  fail(ErrorKind::invalid_argument, "unknown criterion '" + s + "' (gap13|entropy)");
}

Artifact cmd_critline(const Args& a) {
  const Graph g = single_graph(a);
  const auto line = critical_line_fit(g, parse_grid(a.b_grid), parse_grid(a.gamma_grid),
                                      parse_criterion(a.criterion), a.solver.scan(g));
  std::string csv = "b,gamma_c,quality\n";
  for (std::size_t i = 0; i < line.b.size(); ++i) {
    csv += format_double(line.b[i]) + "," + format_double(line.gamma_c[i]) + "," +
           format_double(line.quality[i]) + "\n";
  }
  std::string report = "criterion=" + a.criterion + "\n" + fit_report("poly3", line.fit);
  for (double b : line.skipped_b) report += "skipped_b=" + format_double(b) + "\n";
  return {csv, {{".fit.txt", report}}};
}

GraphFamily resolve_family(const Args& a) {
  if (a.family == "ladder_even") return GraphFamily::ladder_even(budget_override_from_env() ? 32 : 24);
  if (a.family == "ladder_odd") return GraphFamily::ladder_odd(budget_override_from_env() ? 30 : 22);
  std::vector<Graph> graphs;
  for (auto& r : resolve_graphs(a.family, a.long_run)) graphs.push_back(std::move(r.graph));
  return GraphFamily::from_corpus(a.family, graphs);
}

Artifact cmd_scaling(const Args& a) {
  const GraphFamily family = resolve_family(a);
  const auto sizes = parse_int_list(a.sizes);
  require(!sizes.empty(), "--sizes is empty");
  ScalingOptions o;
  o.gap_index = a.gap_index;
  o.refine_steps = a.refine_steps;
  o.scan = a.solver.scan(family.make(sizes.front()));
  o.scan.block.clear();  // sizes differ; each size uses its own first half
  const auto grid = parse_grid(a.gamma_grid);
  if (a.mode == "gap") {
    const auto s = gap_scaling_fit(family, sizes, a.b, grid, o);
    std::string csv = "n,gamma_at_min,gap\n";
    for (const auto& p : s.points) {
      csv += std::to_string(p.n) + "," + format_double(p.gamma_at_min) + "," + format_double(p.gap) + "\n";
    }
    std::string report = "gap_index=" + std::to_string(s.gap_index) + "\n" +
                         fit_report("exp_decay", s.exp_fit) + fit_report("power_law", s.pow_fit);
    return {csv, {{".fit.txt", report}}};
  }
  require(a.mode == "entropy", "--mode must be gap or entropy");
  const auto rows = entropy_scaling(family, sizes, a.b, grid, o);
  std::string csv = "n,gamma_at_max,s_max,s_per_site\n";
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& r : rows) {
    csv += std::to_string(r.n) + "," + format_double(r.gamma_at_max) + "," + format_double(r.s_max) +
           "," + format_double(r.s_per_site) + "\n";
    x.push_back(r.n);
    y.push_back(r.s_max);
  }
  std::string report;
  if (rows.size() >= 2) {
    report = fit_report("exp_decay", fit_exp_decay(x, y)) + fit_report("power_law", fit_power_law(x, y));
  }
  return {csv, {{".fit.txt", report}}};
}

Artifact cmd_ensemble(const Args& a) {
  std::vector<Graph> graphs;
  for (auto& r : resolve_graphs(a.graph, a.long_run || budget_override_from_env())) {
    graphs.push_back(std::move(r.graph));
  }
  require(!graphs.empty(), "no graphs to average");
  EnsembleOptions o;
  o.scan = a.solver.scan(graphs.front());
  o.scan.block.clear();
  o.workers = a.workers;
  const auto table = ensemble_average(graphs, a.b, parse_grid(a.gamma_grid), a.ensemble_seed, o);
  return {sweep_csv(table), {}};
}

// Records every option of the chosen subcommand, defaults included.
Manifest make_manifest(const CLI::App* sub) {
  Manifest m;
  m.set("tool", "spinlat");
  m.set("tool_version", kToolVersion);
  m.set("command", sub->get_name());
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "output") continue;
    std::string value;
    if (opt->get_expected_min() == 0) {
      value = opt->count() > 0 ? "true" : "false";
    } else if (opt->count() > 0) {
      value = opt->as<std::string>();
    } else {
      value = opt->get_default_str();
      if (value.empty()) continue;
    }
    m.set(opt->get_lnames().empty() ? "arg." + name : "opt." + name, value);
  }
  return m;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transverse-field Ising networks on cubic graphs", "spinlat"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", kToolVersion);

  Args a;
  std::map<std::string, std::function<Artifact(const Args&)>> commands;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", a.output, "write the artifact here (plus a .manifest file)");
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", a.workers, "parallel workers (0: machine default)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* gen = app.add_subcommand("gen", "emit a generated graph");
  gen->add_option("family", a.family, "generator family (ladder)");
  gen->add_option("--n", a.n, "total vertex count")->required();
  add_output(gen);
  commands["gen"] = cmd_gen;

  auto* en = app.add_subcommand("enum", "enumerate connected cubic graphs");
  en->add_option("--n", a.n, "vertex count")->required();
  en->add_flag("--planar", a.planar, "planar graphs only");
  en->add_flag("--three-connected", a.three_connected, "3-connected graphs only");
  en->add_flag("--count-only", a.count_only, "print only the number of graphs");
  en->add_flag("--long-run", a.long_run, "allow sizes above the default budget");
  add_output(en);
  add_workers(en);
  commands["enum"] = cmd_enum;

  auto* fr = app.add_subcommand("frustration", "exhaustive classical frustration analysis");
  fr->add_option("--graph", a.graph, "graph spec")->required();
  fr->add_option("--b", a.b, "longitudinal field");
  add_output(fr);
  commands["frustration"] = cmd_frustration;

  auto* so = app.add_subcommand("solve", "spectrum and observables at one point");
  so->add_option("--graph", a.graph, "graph spec")->required();
  so->add_option("--b", a.b, "longitudinal field");
  so->add_option("--gamma", a.gamma, "transverse field");
  so->add_option("--db", a.db, "schedule derivative dB/dt");
  so->add_option("--dgamma", a.dgamma, "schedule derivative dGamma/dt");
  a.solver.add_to(so);
  add_output(so);
  add_workers(so);
  commands["solve"] = cmd_solve;

  auto* sw = app.add_subcommand("sweep", "scan the transverse field at fixed B");
  sw->add_option("--graph", a.graph, "graph spec")->required();
  sw->add_option("--b", a.b, "longitudinal field");
  sw->add_option("--gamma", a.gamma_grid, "gamma grid start:stop:step or list");
  a.solver.add_to(sw);
  add_output(sw);
  add_workers(sw);
  commands["sweep"] = cmd_sweep;

  auto* cl = app.add_subcommand("critline", "critical line and cubic fit");
  cl->add_option("--graph", a.graph, "graph spec")->required();
  cl->add_option("--b", a.b_grid, "B grid");
  cl->add_option("--gamma", a.gamma_grid, "gamma grid");
  cl->add_option("--criterion", a.criterion, "gap13|entropy");
  a.solver.add_to(cl);
  add_output(cl);
  add_workers(cl);
  commands["critline"] = cmd_critline;

  auto* sc = app.add_subcommand("scaling", "gap or entropy scaling over a family");
  sc->add_option("--family", a.family, "ladder_even|ladder_odd|graph spec")->required();
  sc->add_option("--sizes", a.sizes, "comma-separated sizes")->required();
  sc->add_option("--b", a.b, "longitudinal field");
  sc->add_option("--gamma", a.gamma_grid, "gamma grid");
  sc->add_option("--mode", a.mode, "gap|entropy");
  sc->add_option("--gap-index", a.gap_index, "level whose gap is tracked")->check(CLI::Range(2, 64));
  sc->add_option("--refine-steps", a.refine_steps, "golden-section refinement steps")
      ->check(CLI::NonNegativeNumber);
  sc->add_flag("--long-run", a.long_run, "allow large corpus enumeration");
  a.solver.add_to(sc);
  add_output(sc);
  add_workers(sc);
  commands["scaling"] = cmd_scaling;

  auto* ens = app.add_subcommand("ensemble", "average a sweep over a set of graphs");
  ens->add_option("--graphs", a.graph, "graph spec (e.g. enum:8:planar)")->required();
  ens->add_option("--b", a.b, "longitudinal field");
  ens->add_option("--gamma", a.gamma_grid, "gamma grid");
  ens->add_option("--ensemble-seed", a.ensemble_seed, "seed for site and block draws");
  ens->add_flag("--long-run", a.long_run, "allow sizes above the default enumeration budget");
  a.solver.add_to(ens);
  add_output(ens);
  add_workers(ens);
  commands["ensemble"] = cmd_ensemble;

  auto* rp = app.add_subcommand("replay", "rerun the command recorded in a manifest");
  rp->add_option("--manifest", a.manifest, "manifest file")->required();
  add_output(rp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ConversionError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (rp->parsed()) {
      Manifest m = Manifest::read(a.manifest);
      auto replayed = replay_args(m);
      const std::string* recorded = m.find("output");
      const std::string target = !a.output.empty() ? a.output : (recorded ? *recorded : "");
      if (!target.empty()) {
        replayed.push_back("--output");
        replayed.push_back(target);
      }
      return run(replayed, out, err);
    }

    CLI::App* sub = app.get_subcommands().front();
#ifdef _OPENMP
    if (a.workers > 0) omp_set_num_threads(a.workers);
#endif
    const auto start = std::chrono::steady_clock::now();
    const Artifact artifact = commands.at(sub->get_name())(a);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (a.output.empty()) {
      out << artifact.main;
      for (const auto& [suffix, text] : artifact.extras) out << text;
      return kOk;
    }
    write_text(a.output, artifact.main);
    Manifest m = make_manifest(sub);
    m.set("output", a.output);
    for (const auto& [suffix, text] : artifact.extras) {
      write_text(a.output + suffix, text);
      m.set("output" + suffix, a.output + suffix);
      out << text;
    }
    m.set("wall_time_s", format_double(seconds));
    m.write(a.output + ".manifest");
    return kOk;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace spinlat::cli
