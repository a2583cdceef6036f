#include <algorithm>

#include "spinlat/errors.hpp"
#include "spinlat/lattice.hpp"
#include "spinlat/rng.hpp"

namespace spinlat {

VertexSet connected_block(const Graph& g, int size, std::uint64_t seed) {
  require(size >= 1 && size <= g.n(),
          "block size " + std::to_string(size) + " outside [1, " + std::to_string(g.n()) + "]");
  require(g.is_connected(), "connected_block expects a connected graph");
  const auto adj = g.adjacency();
  Rng rng(seed);
  std::vector<char> in_block(g.n(), 0);
  std::vector<char> in_frontier(g.n(), 0);
  VertexSet block;
  std::vector<int> frontier;

  auto add = [&](int v) {
    in_block[v] = 1;
    block.push_back(v);
    for (int w : adj[v]) {
      if (!in_block[w] && !in_frontier[w]) {
        in_frontier[w] = 1;
        frontier.push_back(w);
      }
    }
  };

  add(static_cast<int>(uniform_index(rng, g.n())));
  while (static_cast<int>(block.size()) < size) {
    const auto pick = uniform_index(rng, frontier.size());
    const int v = frontier[pick];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
    in_frontier[v] = 0;
    add(v);
  }
  std::sort(block.begin(), block.end());
  return block;
}

}  // namespace spinlat
