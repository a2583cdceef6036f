#include "spinlat/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "spinlat/errors.hpp"

namespace spinlat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::parse: return "parse-error";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::convergence_failure: return "convergence-failure";
    case ErrorKind::numerical_validity: return "numerical-validity";
    case ErrorKind::degenerate_gap: return "degenerate-gap";
    case ErrorKind::no_interior_extremum: return "no-interior-extremum";
    case ErrorKind::underdetermined_fit: return "underdetermined-fit";
    case ErrorKind::log_domain: return "log-domain";
  }
  return "unknown";
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  *this = Graph(n, std::move(list));
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  require(n >= 1, "graph needs at least one vertex, got n=" + std::to_string(n));
  for (auto& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      fail(ErrorKind::invalid_argument,
           "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
               " has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      fail(ErrorKind::invalid_argument, "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    fail(ErrorKind::invalid_argument,
         "duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
  }
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool Graph::is_connected() const { return connected_components(*this).size() == 1; }

bool Graph::is_regular(int degree) const {
  auto deg = degrees();
  return std::all_of(deg.begin(), deg.end(), [&](int d) { return d == degree; });
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  require(static_cast<int>(perm.size()) == n_, "relabeling has wrong length");
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const auto& e : edges_) mapped.push_back({perm[e.u], perm[e.v]});
  return Graph(n_, std::move(mapped));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> seen(g.n(), 0);
  std::vector<VertexSet> components;
  for (int start = 0; start < g.n(); ++start) {
    if (seen[start]) continue;
    VertexSet comp;
    std::queue<int> queue;
    queue.push(start);
    seen[start] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::vector<int> two_coloring(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> color(g.n(), -1);
  for (int start = 0; start < g.n(); ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::queue<int> queue;
    queue.push(start);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push(w);
        } else if (color[w] == color[v]) {
          return {};
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return !two_coloring(g).empty(); }

namespace {

bool connected_without(const std::vector<std::vector<int>>& adj, int a, int b) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  seen[a] = 1;
  if (b >= 0) seen[b] = 1;
  int start = 0;
  while (start < n && seen[start]) ++start;
  if (start == n) return true;
  int reached = 1;
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  const int removed = (b >= 0 && b != a) ? 2 : 1;
  return reached == n - removed;
}

}  // namespace

bool is_three_connected(const Graph& g) {
  const int n = g.n();
  if (n < 4) return false;
  const auto adj = g.adjacency();
  if (!g.is_connected()) return false;
  for (int a = 0; a < n; ++a) {
    if (!connected_without(adj, a, -1)) return false;
    for (int b = a + 1; b < n; ++b) {
      if (!connected_without(adj, a, b)) return false;
    }
  }
  return true;
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.n()));
  for (const auto& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  return h;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.n() << " m=" << g.edge_count();
  return os.str();
}

}  // namespace spinlat
