#include "riskgen/planarity.hpp"

#include <algorithm>

namespace riskgen {

namespace {

constexpr int kNone = -1;

struct Interval {
  int low = kNone;
  int high = kNone;

  bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
  Interval left;
  Interval right;

  void swap() { std::swap(left, right); }
};

// Edges are identified by their index in the input list. After orientation
// each edge has a source (tail) and target (head) in the DFS forest.
class LeftRightTest {
 public:
  LeftRightTest(int n, const std::vector<Edge>& edges)
      : n_(n),
        adj_(static_cast<size_t>(n)),
        ordered_adj_(static_cast<size_t>(n)),
        height_(static_cast<size_t>(n), kNone),
        parent_edge_(static_cast<size_t>(n), kNone) {
    const size_t m = edges.size();
    source_.assign(m, kNone);
    target_.assign(m, kNone);
    ends_ = edges;
    lowpt_.assign(m, 0);
    lowpt2_.assign(m, 0);
    nesting_depth_.assign(m, 0);
    ref_.assign(m, kNone);
    lowpt_edge_.assign(m, kNone);
    stack_bottom_.assign(m, 0);
    for (size_t e = 0; e < m; ++e) {
      adj_[edges[e].first].push_back(static_cast<int>(e));
      adj_[edges[e].second].push_back(static_cast<int>(e));
    }
  }

  bool run() {
    std::vector<int> roots;
    for (int v = 0; v < n_; ++v) {
      if (height_[v] == kNone) {
        height_[v] = 0;
        roots.push_back(v);
        orient(v);
      }
    }
    for (int v = 0; v < n_; ++v) {
      std::stable_sort(ordered_adj_[v].begin(), ordered_adj_[v].end(),
                       [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
    }
    for (int root : roots) {
      if (!test(root)) return false;
    }
    return true;
  }

 private:
  int other_end(int e, int v) const {
    return ends_[e].first == v ? ends_[e].second : ends_[e].first;
  }

  // Orient edges along a DFS and compute lowpoints and nesting depths.
  void orient(int v) {
    const int e = parent_edge_[v];
    for (int vw : adj_[v]) {
      if (source_[vw] != kNone) continue;
      const int w = other_end(vw, v);
      source_[vw] = v;
      target_[vw] = w;
      ordered_adj_[v].push_back(vw);
      lowpt_[vw] = height_[v];
      lowpt2_[vw] = height_[v];
      if (height_[w] == kNone) {
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[vw] = height_[w];
      }
      nesting_depth_[vw] = 2 * lowpt_[vw];
      if (lowpt2_[vw] < height_[v]) nesting_depth_[vw] += 1;

      if (e != kNone) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    }
  }

  bool conflicting(const Interval& interval, int b) const {
    return !interval.empty() && lowpt_[interval.high] > lowpt_[b];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  bool test(int v) {
    const int e = parent_edge_[v];
    const auto& out = ordered_adj_[v];
    for (size_t i = 0; i < out.size(); ++i) {
      const int ei = out[i];
      const int w = target_[ei];
      stack_bottom_[ei] = stack_.size();
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
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
    // Merge return edges of ei into p.right.
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[p.right.low] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (stack_.size() != stack_bottom_[ei]);

    // Merge conflicting return edges of earlier siblings into p.left.
    while (!stack_.empty() &&
           (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        ref_[p.left.low] = q.left.high;
      }
      p.left.low = q.left.low;
    }

    if (!p.left.empty() || !p.right.empty()) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = source_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();

    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && target_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[p.left.low] = p.right.low;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && target_[p.right.high] == u) {
        p.right.high = ref_[p.right.high];
      }
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        p.right.low = kNone;
      }
      stack_.push_back(p);
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
  std::vector<Edge> ends_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> ordered_adj_;
  std::vector<int> height_;
  std::vector<int> parent_edge_;

  std::vector<int> source_;
  std::vector<int> target_;
  std::vector<int> lowpt_;
  std::vector<int> lowpt2_;
  std::vector<int> nesting_depth_;
  std::vector<int> ref_;
  std::vector<int> lowpt_edge_;
  std::vector<size_t> stack_bottom_;
  std::vector<ConflictPair> stack_;
};

}  // namespace

bool is_planar(int vertex_count, const std::vector<Edge>& edges) {
  const auto m = static_cast<long>(edges.size());
  if (vertex_count < 5 || m < 9) return true;
  if (m > 3L * vertex_count - 6) return false;
  return LeftRightTest(vertex_count, edges).run();
}

}  // namespace riskgen
