#include "riskgen/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace riskgen {

namespace {

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<char> matrix;

  Graph(int vertex_count, const std::vector<Edge>& edges)
      : n(vertex_count),
        adj(static_cast<size_t>(vertex_count)),
        matrix(static_cast<size_t>(vertex_count) * static_cast<size_t>(vertex_count), 0) {
    for (const auto& [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
      matrix[static_cast<size_t>(a) * n + b] = 1;
      matrix[static_cast<size_t>(b) * n + a] = 1;
    }
  }

  bool linked(int a, int b) const { return matrix[static_cast<size_t>(a) * n + b] != 0; }
};

// 1-dimensional Weisfeiler-Leman refinement run on both graphs with a shared
// signature table, so equal colors mean equal refinement histories.
void refine(const Graph& a, const Graph& b, std::vector<int>& color_a, std::vector<int>& color_b) {
  color_a.resize(static_cast<size_t>(a.n));
  color_b.resize(static_cast<size_t>(b.n));
  for (int v = 0; v < a.n; ++v) color_a[v] = static_cast<int>(a.adj[v].size());
  for (int v = 0; v < b.n; ++v) color_b[v] = static_cast<int>(b.adj[v].size());

  auto class_count = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> all(x);
    all.insert(all.end(), y.begin(), y.end());
    std::sort(all.begin(), all.end());
    return std::unique(all.begin(), all.end()) - all.begin();
  };

  auto classes = class_count(color_a, color_b);
  for (int round = 0; round < a.n + 1; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> table;
    auto relabel = [&](const Graph& g, const std::vector<int>& in) {
      std::vector<int> out(in.size());
      for (int v = 0; v < g.n; ++v) {
        std::vector<int> around;
        around.reserve(g.adj[v].size());
        for (int w : g.adj[v]) around.push_back(in[w]);
        std::sort(around.begin(), around.end());
        auto key = std::make_pair(in[v], std::move(around));
        auto it = table.try_emplace(std::move(key), static_cast<int>(table.size())).first;
        out[v] = it->second;
      }
      return out;
    };
    auto next_a = relabel(a, color_a);
    auto next_b = relabel(b, color_b);
    const auto next_classes = class_count(next_a, next_b);
    color_a = std::move(next_a);
    color_b = std::move(next_b);
    if (next_classes == classes) break;
    classes = next_classes;
  }
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::vector<int> color_a, std::vector<int> color_b)
      : a_(a), b_(b), color_a_(std::move(color_a)), color_b_(std::move(color_b)) {
    core_a_.assign(static_cast<size_t>(a.n), -1);
    core_b_.assign(static_cast<size_t>(b.n), -1);
    build_order();
  }

  bool match(size_t depth = 0) {
    if (depth == order_.size()) return true;
    const int u = order_[depth];
    for (int v = 0; v < b_.n; ++v) {
      if (core_b_[v] >= 0 || color_b_[v] != color_a_[u] || !feasible(u, v)) continue;
      core_a_[u] = v;
      core_b_[v] = u;
      if (match(depth + 1)) return true;
      core_a_[u] = -1;
      core_b_[v] = -1;
    }
    return false;
  }

  const std::vector<int>& mapping() const { return core_a_; }

 private:
  // Mapped neighbours of u must map onto mapped neighbours of v, and the two
  // counts must agree so that no extra edge appears on b's side.
  bool feasible(int u, int v) const {
    int mapped_a = 0;
    for (int w : a_.adj[u]) {
      if (core_a_[w] < 0) continue;
      if (!b_.linked(v, core_a_[w])) return false;
      ++mapped_a;
    }
    int mapped_b = 0;
    for (int w : b_.adj[v]) {
      if (core_b_[w] >= 0) ++mapped_b;
    }
    return mapped_a == mapped_b;
  }

  // Grow the order so each new vertex touches as many placed vertices as
  // possible; ties go to the rarer color, then the higher degree.
  void build_order() {
    std::map<int, int> frequency;
    for (int c : color_a_) ++frequency[c];
    std::vector<char> placed(static_cast<size_t>(a_.n), 0);
    std::vector<int> links(static_cast<size_t>(a_.n), 0);
    for (int step = 0; step < a_.n; ++step) {
      int best = -1;
      for (int u = 0; u < a_.n; ++u) {
        if (placed[u]) continue;
        if (best < 0) {
          best = u;
          continue;
        }
        const auto key = [&](int x) {
          return std::make_tuple(links[x], -frequency[color_a_[x]],
                                 static_cast<int>(a_.adj[x].size()));
        };
        if (key(u) > key(best)) best = u;
      }
      placed[best] = 1;
      order_.push_back(best);
      for (int w : a_.adj[best]) ++links[w];
    }
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> color_a_;
  std::vector<int> color_b_;
  std::vector<int> core_a_;
  std::vector<int> core_b_;
  std::vector<int> order_;
};

}  // namespace

std::optional<std::vector<TerritoryId>> find_isomorphism(int vertex_count_a,
                                                         const std::vector<Edge>& edges_a,
                                                         int vertex_count_b,
                                                         const std::vector<Edge>& edges_b) {
  if (vertex_count_a != vertex_count_b || edges_a.size() != edges_b.size()) return std::nullopt;
  const Graph a(vertex_count_a, edges_a);
  const Graph b(vertex_count_b, edges_b);

  std::vector<int> color_a;
  std::vector<int> color_b;
  refine(a, b, color_a, color_b);
  auto histogram_a = color_a;
  auto histogram_b = color_b;
  std::sort(histogram_a.begin(), histogram_a.end());
  std::sort(histogram_b.begin(), histogram_b.end());
  if (histogram_a != histogram_b) return std::nullopt;

  Matcher matcher(a, b, std::move(color_a), std::move(color_b));
  if (!matcher.match()) return std::nullopt;
  return matcher.mapping();
}

bool are_isomorphic(const MapGraph& a, const MapGraph& b) {
  return find_isomorphism(a.territory_count, a.edges, b.territory_count, b.edges).has_value();
}

std::vector<int> isomorphism_classes(const std::vector<MapGraph>& maps) {
  std::vector<int> class_of(maps.size(), -1);
  std::vector<size_t> representatives;
  for (size_t i = 0; i < maps.size(); ++i) {
    for (size_t c = 0; c < representatives.size(); ++c) {
      if (are_isomorphic(maps[representatives[c]], maps[i])) {
        class_of[i] = static_cast<int>(c);
        break;
      }
    }
    if (class_of[i] < 0) {
      class_of[i] = static_cast<int>(representatives.size());
      representatives.push_back(i);
    }
  }
  return class_of;
}

}  // namespace riskgen
