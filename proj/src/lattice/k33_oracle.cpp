#include <algorithm>
#include <array>

#include "spinlat/errors.hpp"
#include "spinlat/planarity.hpp"

namespace spinlat {
namespace {

// Backtracking search for nine internally disjoint branch paths. Vertex
// states: 0 free, 1 used as an internal path vertex, 2 branch vertex.
class K33Search {
 public:
  K33Search(const std::vector<std::vector<int>>& adj) : adj_(adj), state_(adj.size(), 0) {}

  bool try_branches(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    for (int v : a) state_[v] = 2;
    for (int v : b) state_[v] = 2;
    a_ = a;
    b_ = b;
    const bool found = connect_pair(0);
    for (int v : a) state_[v] = 0;
    for (int v : b) state_[v] = 0;
    return found;
  }

 private:
  bool connect_pair(int pair) {
    if (pair == 9) return true;
    const int from = a_[pair / 3];
    const int to = b_[pair % 3];
    return extend(from, to, pair);
  }

  bool extend(int v, int to, int pair) {
    for (int w : adj_[v]) {
      if (w == to) {
        if (connect_pair(pair + 1)) return true;
        continue;
      }
      if (state_[w] != 0) continue;
      state_[w] = 1;
      if (extend(w, to, pair)) return true;
      state_[w] = 0;
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> state_;
  std::array<int, 3> a_{};
  std::array<int, 3> b_{};
};

}  // namespace

bool k33_minor_oracle(const Graph& g, int max_n) {
  require(g.is_connected(), "k33_minor_oracle expects a connected graph");
  const auto deg = g.degrees();
  require(*std::max_element(deg.begin(), deg.end()) <= 3,
          "k33_minor_oracle requires maximum degree <= 3");
  if (g.n() > max_n) {
    fail(ErrorKind::budget_exceeded, "k33_minor_oracle: n=" + std::to_string(g.n()) +
                                         " exceeds the exhaustive-search budget of " +
                                         std::to_string(max_n));
  }
  // Branch vertices of a K3,3 subdivision have degree exactly three here.
  std::vector<int> candidates;
  for (int v = 0; v < g.n(); ++v) {
    if (deg[v] == 3) candidates.push_back(v);
  }
  const int c = static_cast<int>(candidates.size());
  if (c < 6 || g.edge_count() < 9) return false;

  const auto adj = g.adjacency();
  K33Search search(adj);
  std::vector<int> pick(6);
  // Choose 6 branch vertices; the smallest one fixes side A.
  std::vector<char> mask(c, 0);
  std::fill(mask.begin(), mask.begin() + 6, 1);
  do {
    int t = 0;
    for (int i = 0; i < c; ++i) {
      if (mask[i]) pick[t++] = candidates[i];
    }
    for (int x = 1; x < 6; ++x) {
      for (int y = x + 1; y < 6; ++y) {
        std::array<int, 3> a{pick[0], pick[x], pick[y]};
        std::array<int, 3> b{};
        int k = 0;
        for (int i = 1; i < 6; ++i) {
          if (i != x && i != y) b[k++] = pick[i];
        }
        if (search.try_branches(a, b)) return true;
      }
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return false;
}

}  // namespace spinlat
