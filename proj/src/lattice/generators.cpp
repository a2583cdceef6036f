#include <algorithm>

#include "spinlat/errors.hpp"
#include "spinlat/lattice.hpp"

namespace spinlat {

Graph ladder_on_circle(int n_total) {
  require(n_total >= 6 && n_total % 2 == 0,
          "ladder_on_circle needs an even vertex count >= 6, got " +
              std::to_string(n_total));
  const int ring = n_total / 2;
  std::vector<Edge> edges;
  edges.reserve(3 * ring);
  for (int i = 0; i < ring; ++i) {
    edges.push_back({i, (i + 1) % ring});
    edges.push_back({ring + i, ring + (i + 1) % ring});
    edges.push_back({i, ring + i});
  }
  return Graph(n_total, std::move(edges));
}

VertexSet ladder_inner_ring(int n_total) {
  require(n_total >= 6 && n_total % 2 == 0, "not a ladder size: " + std::to_string(n_total));
  VertexSet ring(n_total / 2);
  for (int i = 0; i < n_total / 2; ++i) ring[i] = i;
  return ring;
}

VertexSet ladder_outer_ring(int n_total) {
  require(n_total >= 6 && n_total % 2 == 0, "not a ladder size: " + std::to_string(n_total));
  VertexSet ring(n_total / 2);
  for (int i = 0; i < n_total / 2; ++i) ring[i] = n_total / 2 + i;
  return ring;
}

GraphFamily::GraphFamily(std::string name, std::vector<int> sizes,
                         std::function<Graph(int)> make)
    : name_(std::move(name)), sizes_(std::move(sizes)), make_(std::move(make)) {
  std::sort(sizes_.begin(), sizes_.end());
}

GraphFamily GraphFamily::ladder_even(int max_n) {
  std::vector<int> sizes;
  for (int n = 8; n <= max_n; n += 4) sizes.push_back(n);
  return GraphFamily("ladder_even", std::move(sizes), ladder_on_circle);
}

GraphFamily GraphFamily::ladder_odd(int max_n) {
  std::vector<int> sizes;
  for (int n = 6; n <= max_n; n += 4) sizes.push_back(n);
  return GraphFamily("ladder_odd", std::move(sizes), ladder_on_circle);
}

GraphFamily GraphFamily::from_corpus(std::string name, const std::vector<Graph>& graphs) {
  std::vector<int> sizes;
  std::vector<Graph> firsts;
  for (const auto& g : graphs) {
    if (std::find(sizes.begin(), sizes.end(), g.n()) == sizes.end()) {
      sizes.push_back(g.n());
      firsts.push_back(g);
    }
  }
  auto make = [firsts](int n) {
    for (const auto& g : firsts) {
      if (g.n() == n) return g;
    }
    fail(ErrorKind::invalid_argument, "corpus has no graph with n=" + std::to_string(n));
  };
  return GraphFamily(std::move(name), std::move(sizes), make);
}

bool GraphFamily::has_size(int n) const {
  return std::find(sizes_.begin(), sizes_.end(), n) != sizes_.end();
}

Graph GraphFamily::make(int n) const {
  require(has_size(n), "family " + name_ + " has no member with n=" + std::to_string(n));
  Graph g = make_(n);
  require(g.is_regular(3) && g.is_connected(),
          "family " + name_ + " produced a graph that is not connected cubic");
  return g;
}

}  // namespace spinlat
