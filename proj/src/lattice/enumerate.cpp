#include "spinlat/enumerate.hpp"

#include <algorithm>
#include <set>

#include "spinlat/canonical.hpp"
#include "spinlat/errors.hpp"
#include "spinlat/planarity.hpp"

namespace spinlat {
namespace {

// Generates every connected cubic graph under every BFS labeling: vertices are
// saturated in label order and each open slot of the current vertex goes
// either to an already discovered, later vertex or to a fresh vertex that
// receives the next label. Isomorphic copies are merged by canonical form.
class BfsCubicGenerator {
 public:
  explicit BfsCubicGenerator(int n) : n_(n), deg_(n, 0), adj_(n) {}

  std::set<Graph> run() {
    discovered_ = 1;
    process(0);
    return found_;
  }

 private:
  bool adjacent(int a, int b) const {
    return std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end();
  }

  void link(int a, int b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    ++deg_[a];
    ++deg_[b];
  }

  void unlink(int a, int b) {
    adj_[a].pop_back();
    adj_[b].pop_back();
    --deg_[a];
    --deg_[b];
  }

  void process(int v) {
    if (v == n_) {
      if (discovered_ == n_) emit();
      return;
    }
    if (v >= discovered_) return;  // disconnected
    const int open = 3 - deg_[v];
    // Choose targets among discovered vertices w > v in increasing order,
    // then fill the rest with fresh vertices.
    choose(v, v + 1, open);
  }

  void choose(int v, int from, int open) {
    // option: remaining slots go to fresh vertices
    if (discovered_ + open <= n_) {
      const int first_new = discovered_;
      for (int i = 0; i < open; ++i) link(v, first_new + i);
      discovered_ += open;
      process(v + 1);
      discovered_ -= open;
      for (int i = open - 1; i >= 0; --i) unlink(v, first_new + i);
    }
    if (open == 0) return;
    for (int w = from; w < discovered_; ++w) {
      if (deg_[w] >= 3 || adjacent(v, w)) continue;
      link(v, w);
      choose(v, w + 1, open - 1);
      unlink(v, w);
    }
  }

  void emit() {
    std::vector<Edge> edges;
    edges.reserve(3 * n_ / 2);
    for (int a = 0; a < n_; ++a) {
      for (int b : adj_[a]) {
        if (a < b) edges.push_back({a, b});
      }
    }
    found_.insert(canonical_form(Graph(n_, std::move(edges))));
  }

  int n_;
  int discovered_ = 0;
  std::vector<int> deg_;
  std::vector<std::vector<int>> adj_;
  std::set<Graph> found_;
};

// Subdivide edges e1 and e2 and join the two new vertices.
Graph insert_edge(const Graph& g, std::size_t i1, std::size_t i2) {
  const int x = g.n();
  const int y = g.n() + 1;
  const Edge e1 = g.edges()[i1];
  const Edge e2 = g.edges()[i2];
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 3);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i != i1 && i != i2) edges.push_back(g.edges()[i]);
  }
  edges.push_back({e1.u, x});
  edges.push_back({e1.v, x});
  edges.push_back({e2.u, y});
  edges.push_back({e2.v, y});
  edges.push_back({x, y});
  return Graph(g.n() + 2, std::move(edges));
}

// 3-connected planar cubic graphs, grown from K4 by edge insertion. Every
// such graph other than K4 reduces to a smaller one by removing an edge and
// suppressing its endpoints.
std::set<Graph> polyhedral_cubic(int n) {
  std::set<Graph> level{canonical_form(Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}))};
  for (int size = 6; size <= n; size += 2) {
    std::set<Graph> next;
    for (const auto& g : level) {
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
          Graph h = insert_edge(g, i, j);
          if (!is_three_connected(h) || !is_planar(h)) continue;
          next.insert(canonical_form(h));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::vector<Graph> enumerate_cubic(int n, const EnumerateOptions& options) {
  require(n % 2 == 0 && n >= 4, "enumerate_cubic needs an even n >= 4, got " + std::to_string(n));
  require(options.min_connectivity == 1 || options.min_connectivity == 3,
          "min_connectivity must be 1 or 3");
  const int limit = options.long_run ? options.long_run_max_n : options.default_max_n;
  if (n > limit) {
    fail(ErrorKind::budget_exceeded,
         "enumerate_cubic: n=" + std::to_string(n) + " exceeds the budget of " +
             std::to_string(limit) + (options.long_run ? "" : " (long-run flag not set)"));
  }

  std::set<Graph> found;
  if (options.planar_only && options.min_connectivity == 3) {
    found = polyhedral_cubic(n);
  } else {
    found = BfsCubicGenerator(n).run();
  }

  std::vector<Graph> out;
  for (const auto& g : found) {
    if (options.min_connectivity == 3 && !is_three_connected(g)) continue;
    if (options.planar_only && !is_planar(g)) continue;
    out.push_back(g);
  }
  return out;
}

}  // namespace spinlat
