#include <algorithm>
#include <exception>
#include <numeric>

#include "spinlat/canonical.hpp"
#include "spinlat/errors.hpp"
#include "spinlat/rng.hpp"
#include "spinlat/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spinlat {

EnsembleDraw ensemble_draw(const Graph& g, std::uint64_t seed) {
  const std::uint64_t graph_seed = derive_seed(seed, graph_hash(g));
  Rng rng(graph_seed);
  EnsembleDraw draw;
  draw.site = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(g.n())));
  draw.block = connected_block(g, g.n() / 2, derive_seed(graph_seed, 1));
  return draw;
}

SweepTable ensemble_average(const std::vector<Graph>& graphs, double b,
                            const std::vector<double>& gamma_grid, std::uint64_t seed,
                            const EnsembleOptions& options) {
  require(!graphs.empty(), "ensemble_average: no graphs");
  const int n = graphs.front().n();
  for (const auto& g : graphs) {
    require(g.n() == n, "ensemble_average: graphs of mixed sizes (" + std::to_string(n) + " and " +
                            std::to_string(g.n()) + ")");
  }

  // reduction order: canonical form, then labeled graph
  std::vector<Graph> canon;
  canon.reserve(graphs.size());
  for (const auto& g : graphs) canon.push_back(canonical_form(g));
  std::vector<std::size_t> order(graphs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
    if (canon[a] != canon[c]) return canon[a] < canon[c];
    return graphs[a] < graphs[c];
  });

  const auto count = static_cast<long>(graphs.size());
  std::vector<SweepTable> tables(graphs.size());
  std::vector<std::exception_ptr> errors(graphs.size());
#ifdef _OPENMP
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
  for (long i = 0; i < count; ++i) {
    try {
      const Graph& g = graphs[order[static_cast<std::size_t>(i)]];
      const EnsembleDraw draw = ensemble_draw(g, seed);
      ScanOptions scan = options.scan;
      scan.single_site = draw.site;
      scan.block = draw.block;
      tables[static_cast<std::size_t>(i)] = scan_line(g, b, gamma_grid, scan);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  SweepTable avg = tables.front();
  const double weight = 1.0 / static_cast<double>(tables.size());
  for (std::size_t r = 0; r < avg.rows.size(); ++r) {
    SweepRow& out = avg.rows[r];
    out.e1 = out.delta12 = out.delta13 = out.entropy_single = out.entropy_half = 0.0;
    std::fill(out.c_z.begin(), out.c_z.end(), 0.0);
    std::fill(out.c_rho.begin(), out.c_rho.end(), 0.0);
    out.degeneracy_flag = false;
    out.ground_cluster = 0;
    for (const auto& t : tables) {
      const SweepRow& row = t.rows[r];
      out.e1 += row.e1;
      out.delta12 += row.delta12;
      out.delta13 += row.delta13;
      out.entropy_single += row.entropy_single;
      out.entropy_half += row.entropy_half;
      for (std::size_t l = 0; l < out.c_z.size(); ++l) out.c_z[l] += row.c_z[l];
      for (std::size_t l = 0; l < out.c_rho.size(); ++l) out.c_rho[l] += row.c_rho[l];
      out.degeneracy_flag = out.degeneracy_flag || row.degeneracy_flag;
      out.ground_cluster = std::max(out.ground_cluster, row.ground_cluster);
    }
    out.e1 *= weight;
    out.delta12 *= weight;
    out.delta13 *= weight;
    out.entropy_single *= weight;
    out.entropy_half *= weight;
    for (double& c : out.c_z) c *= weight;
    for (double& c : out.c_rho) c *= weight;
  }
  return avg;
}

}  // namespace spinlat
