#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spinlat/graph.hpp"

namespace spinlat {

/// Two rings of n_total/2 spins with rungs (i, i + n_total/2). The inner ring
/// holds vertices 0..n/2-1, so tracing out one ring is a contiguous-bit trace.
Graph ladder_on_circle(int n_total);

/// Inner ring of a ladder_on_circle graph: {0, ..., n_total/2 - 1}.
VertexSet ladder_inner_ring(int n_total);
VertexSet ladder_outer_ring(int n_total);

/// Named source of cubic graphs indexed by vertex count.
class GraphFamily {
 public:
  GraphFamily(std::string name, std::vector<int> sizes,
              std::function<Graph(int)> make);

  /// Ladders whose rings have even length (N = 8, 12, 16, ...): not frustrated.
  static GraphFamily ladder_even(int max_n = 24);
  /// Ladders whose rings have odd length (N = 6, 10, 14, ...): frustrated.
  static GraphFamily ladder_odd(int max_n = 22);
  /// First graph of each size from a loaded corpus.
  static GraphFamily from_corpus(std::string name, const std::vector<Graph>& graphs);

  const std::string& name() const noexcept { return name_; }
  const std::vector<int>& sizes() const noexcept { return sizes_; }
  bool has_size(int n) const;
  Graph make(int n) const;

 private:
  std::string name_;
  std::vector<int> sizes_;
  std::function<Graph(int)> make_;
};

struct FrustrationReport {
  bool bipartite = false;
  /// Minimum number of edges whose endpoints carry equal spins.
  int min_violations = 0;
  /// Number of assignments minimizing the classical energy at the given field.
  std::uint64_t classical_degeneracy = 0;
  /// Minimum of sum_<ij> z_i z_j + b sum_i z_i over all assignments.
  double min_energy = 0.0;
  double b = 0.0;
};

/// Exhaustive scan of the 2^n classical assignments (n <= 26).
FrustrationReport frustration(const Graph& g, double b = 0.0);

/// Connected vertex set grown by seeded random BFS from a seeded random start.
VertexSet connected_block(const Graph& g, int size, std::uint64_t seed);

}  // namespace spinlat
