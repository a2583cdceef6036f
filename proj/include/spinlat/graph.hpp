#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <initializer_list>
#include <vector>

namespace spinlat {

struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Sorted list of vertex indices.
using VertexSet = std::vector<int>;

/// Undirected simple graph. Edges are stored canonically: each pair ascending
/// and the list sorted, so equal graphs compare (and serialize) identically.
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalizes. Throws invalid-argument on self-loops,
  /// out-of-range endpoints or duplicate edges.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges)
      : Graph(n, std::vector<std::pair<int, int>>(edges)) {}

  int n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  bool is_connected() const;
  bool is_regular(int degree) const;
  bool has_edge(int u, int v) const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(const std::vector<int>& perm) const;

  bool operator==(const Graph&) const = default;
  auto operator<=>(const Graph& other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    return edges_ <=> other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// BFS two-coloring; empty if the graph has an odd cycle.
std::vector<int> two_coloring(const Graph& g);

bool is_bipartite(const Graph& g);

/// Vertex connectivity is at least three (no cut vertex and no 2-separator).
/// Intended for the small graphs handled here: O(n^2 (n + m)).
bool is_three_connected(const Graph& g);

/// 64-bit FNV-1a hash of (n, edge list).
std::uint64_t graph_hash(const Graph& g);

std::string describe(const Graph& g);

}  // namespace spinlat
