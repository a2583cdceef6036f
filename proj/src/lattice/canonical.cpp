#include "spinlat/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace spinlat {
namespace {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.n()), adj_(g.adjacency()) {}

  std::vector<int> run() {
    std::vector<int> color(n_);
    for (int v = 0; v < n_; ++v) color[v] = static_cast<int>(adj_[v].size());
    compress(color);
    search(std::move(color));
    return best_perm_;
  }

 private:
  // Renumber colors to 0..k-1 preserving order; returns k.
  int compress(std::vector<int>& color) const {
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& c : color) {
      c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
    }
    return static_cast<int>(sorted.size());
  }

  // Equitable refinement: split cells by the multiset of neighbour colors
  // until stable. Depends on colors only, hence label-invariant.
  int refine(std::vector<int>& color) const {
    int cells = compress(color);
    std::vector<std::vector<int>> signature(n_);
    std::vector<int> order(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        auto& sig = signature[v];
        sig.clear();
        sig.push_back(color[v]);
        for (int w : adj_[v]) sig.push_back(color[w]);
        std::sort(sig.begin() + 1, sig.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return signature[a] < signature[b]; });
      int rank = 0;
      std::vector<int> next(n_);
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      const int new_cells = rank + 1;
      color.swap(next);
      if (new_cells == cells) return cells;
      cells = new_cells;
    }
  }

  void search(std::vector<int> color) {
    const int cells = refine(color);
    if (cells == n_) {
      consider_leaf(color);
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : color) ++size[c];
    int target = -1;
    for (int c = 0; c < cells; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    for (int v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      std::vector<int> child(n_);
      for (int u = 0; u < n_; ++u) child[u] = 2 * color[u] + (u == v ? 0 : 1);
      search(std::move(child));
    }
  }

  void consider_leaf(const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> cert;
    cert.reserve(n_ * 2);
    for (int v = 0; v < n_; ++v) {
      for (int w : adj_[v]) {
        if (v < w) {
          int a = perm[v], b = perm[w];
          if (a > b) std::swap(a, b);
          cert.push_back({a, b});
        }
      }
    }
    std::sort(cert.begin(), cert.end());
    if (best_perm_.empty() || cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_perm_ = perm;
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> best_cert_;
  std::vector<int> best_perm_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_form(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace spinlat
