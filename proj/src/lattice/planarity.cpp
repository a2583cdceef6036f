#include "spinlat/planarity.hpp"

#include <algorithm>
#include <limits>

#include "spinlat/errors.hpp"

namespace spinlat {
namespace {

// Left-right planarity test, testing phase only (no embedding is built).
// Edges are oriented during the first DFS; every oriented edge is identified
// by the index of its undirected edge.
class LrTest {
 public:
  explicit LrTest(const Graph& g)
      : n_(g.n()),
        m_(static_cast<int>(g.edge_count())),
        adj_(g.n()),
        height_(g.n(), kNone),
        parent_edge_(g.n(), kNone),
        src_(m_),
        dst_(m_),
        oriented_(m_, 0),
        lowpt_(m_),
        lowpt2_(m_),
        nesting_depth_(m_),
        ref_(m_, kNone),
        lowpt_edge_(m_, kNone),
        stack_bottom_(m_, kNone),
        out_(g.n()) {
    int id = 0;
    for (const auto& e : g.edges()) {
      adj_[e.u].push_back({e.v, id});
      adj_[e.v].push_back({e.u, id});
      ++id;
    }
  }

  bool run() {
    if (n_ > 2 && m_ > 3 * n_ - 6) return false;
    for (int v = 0; v < n_; ++v) {
      if (height_[v] == kNone) {
        height_[v] = 0;
        roots_.push_back(v);
        orient(v);
      }
    }
    for (int v = 0; v < n_; ++v) {
      std::stable_sort(out_[v].begin(), out_[v].end(),
                       [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
    }
    for (int root : roots_) {
      if (!test(root)) return false;
    }
    return true;
  }

 private:
  static constexpr int kNone = -1;

  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };

  struct ConflictPair {
    Interval left;
    Interval right;
    int id = kNone;
    void swap_sides() { std::swap(left, right); }
  };

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty() && p.right.empty()) return std::numeric_limits<int>::max();
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  int top_id() const { return stack_.empty() ? kNone : stack_.back().id; }

  void push(ConflictPair p) {
    if (p.id == kNone) p.id = next_pair_id_++;
    stack_.push_back(p);
  }

  ConflictPair pop() {
    ConflictPair p = stack_.back();
    stack_.pop_back();
    return p;
  }

  void orient(int v) {
    const int e = parent_edge_[v];
    for (auto [w, id] : adj_[v]) {
      if (oriented_[id]) continue;
      oriented_[id] = 1;
      src_[id] = v;
      dst_[id] = w;
      out_[v].push_back(id);
      lowpt_[id] = height_[v];
      lowpt2_[id] = height_[v];
      if (height_[w] == kNone) {
        parent_edge_[w] = id;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[id] = height_[w];
      }
      nesting_depth_[id] = 2 * lowpt_[id];
      if (lowpt2_[id] < height_[v]) nesting_depth_[id] += 1;
      if (e != kNone) {
        if (lowpt_[id] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[id]);
          lowpt_[e] = lowpt_[id];
        } else if (lowpt_[id] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[id]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[id]);
        }
      }
    }
  }

  bool test(int v) {
    const int e = parent_edge_[v];
    for (std::size_t i = 0; i < out_[v].size(); ++i) {
      const int ei = out_[v][i];
      const int w = dst_[ei];
      stack_bottom_[ei] = top_id();
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        ConflictPair p;
        p.right = {ei, ei};
        push(p);
      }
      if (lowpt_[ei] < height_[v]) {
        if (i == 0) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = pop();
      if (!q.left.empty()) q.swap_sides();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right.high = q.right.high;
        } else {
          ref_[p.right.low] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (top_id() != stack_bottom_[ei]);

    while (!stack_.empty() &&
           (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = pop();
      if (conflicting(q.right, ei)) q.swap_sides();
      if (conflicting(q.right, ei)) return false;
      if (p.right.low != kNone) ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left.high = q.left.high;
      } else {
        ref_[p.left.low] = q.left.high;
      }
      p.left.low = q.left.low;
    }
    if (!p.left.empty() || !p.right.empty()) push(p);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = src_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) pop();
    if (!stack_.empty()) {
      ConflictPair p = pop();
      while (p.left.high != kNone && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[p.left.low] = p.right.low;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        p.right.low = kNone;
      }
      push(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) {
        ref_[e] = hl;
      } else {
        ref_[e] = hr;
      }
    }
  }

  int n_;
  int m_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> height_;
  std::vector<int> parent_edge_;
  std::vector<int> src_;
  std::vector<int> dst_;
  std::vector<char> oriented_;
  std::vector<int> lowpt_;
  std::vector<int> lowpt2_;
  std::vector<int> nesting_depth_;
  std::vector<int> ref_;
  std::vector<int> lowpt_edge_;
  std::vector<int> stack_bottom_;
  std::vector<std::vector<int>> out_;
  std::vector<int> roots_;
  std::vector<ConflictPair> stack_;
  int next_pair_id_ = 0;
};

}  // namespace

bool is_planar(const Graph& g) {
  require(g.is_connected(), "is_planar expects a connected graph; test components separately");
  return LrTest(g).run();
}

}  // namespace spinlat
