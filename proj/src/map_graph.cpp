#include "riskgen/map_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "riskgen/planarity.hpp"

namespace riskgen {

void MapGraph::canonicalize() {
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  for (auto& c : continents) std::sort(c.territories.begin(), c.territories.end());
}

bool MapGraph::has_edge(TerritoryId a, TerritoryId b) const {
  const Edge e = a < b ? Edge{a, b} : Edge{b, a};
  return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<std::vector<TerritoryId>> MapGraph::adjacency() const {
  std::vector<std::vector<TerritoryId>> adj(static_cast<size_t>(territory_count));
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<int> MapGraph::continent_index() const {
  std::vector<int> index(static_cast<size_t>(territory_count), -1);
  for (size_t c = 0; c < continents.size(); ++c) {
    for (TerritoryId t : continents[c].territories) {
      if (t >= 0 && t < territory_count) index[t] = static_cast<int>(c);
    }
  }
  return index;
}

bool MapGraph::structurally_equal(const MapGraph& other) const {
  if (territory_count != other.territory_count || edges != other.edges ||
      continents.size() != other.continents.size()) {
    return false;
  }
  for (size_t i = 0; i < continents.size(); ++i) {
    if (continents[i].bonus != other.continents[i].bonus ||
        continents[i].territories != other.continents[i].territories) {
      return false;
    }
  }
  return true;
}

void check_structure(const MapGraph& map) {
  std::vector<std::string> problems;
  if (map.territory_count < 2) {
    problems.push_back("territory count " + std::to_string(map.territory_count) +
                       " is below the minimum of 2");
  }
  std::set<Edge> seen;
  for (auto [a, b] : map.edges) {
    const std::string label = "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    if (a < 0 || b < 0 || a >= map.territory_count || b >= map.territory_count) {
      problems.push_back("edge " + label + " references a nonexistent territory");
      continue;
    }
    if (a == b) {
      problems.push_back("edge " + label + " is a self-loop");
      continue;
    }
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) problems.push_back("duplicate edge " + label);
  }
  for (const auto& c : map.continents) {
    for (TerritoryId t : c.territories) {
      if (t < 0 || t >= map.territory_count) {
        problems.push_back("continent '" + c.name + "' lists nonexistent territory " +
                           std::to_string(t));
      }
    }
  }
  if (!problems.empty()) {
    std::ostringstream out;
    out << "malformed map '" << map.name << "':";
    for (const auto& p : problems) out << "\n  " << p;
    throw MapError(out.str());
  }
}

int connected_components(int vertex_count, const std::vector<Edge>& edges,
                         std::vector<int>& label) {
  // Union-find; labels are renumbered densely in order of the smallest member.
  std::vector<int> parent(static_cast<size_t>(vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& [a, b] : edges) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  label.assign(static_cast<size_t>(vertex_count), -1);
  std::vector<int> root_label(static_cast<size_t>(vertex_count), -1);
  int count = 0;
  for (int v = 0; v < vertex_count; ++v) {
    const int r = find(v);
    if (root_label[r] < 0) root_label[r] = count++;
    label[v] = root_label[r];
  }
  return count;
}

bool is_connected(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count <= 1) return true;
  std::vector<int> label;
  return connected_components(vertex_count, edges, label) == 1;
}

ValidationReport validate_map(const MapGraph& map) {
  check_structure(map);
  MapGraph canon = map;
  canon.canonicalize();

  ValidationReport report;
  report.planar = is_planar(canon);
  if (!report.planar) report.messages.push_back("graph is not planar");

  report.connected = is_connected(canon.territory_count, canon.edges);
  if (!report.connected) report.messages.push_back("graph is not connected");

  report.partition_ok = true;
  std::vector<int> claims(static_cast<size_t>(canon.territory_count), 0);
  for (const auto& c : canon.continents) {
    if (c.territories.empty()) {
      report.partition_ok = false;
      report.messages.push_back("continent '" + c.name + "' has no territories");
    }
    if (c.bonus < 0) {
      report.partition_ok = false;
      report.messages.push_back("continent '" + c.name + "' has negative bonus");
    }
    for (TerritoryId t : c.territories) ++claims[t];
  }
  for (TerritoryId t = 0; t < canon.territory_count; ++t) {
    if (claims[t] == 0) {
      report.partition_ok = false;
      report.messages.push_back("territory " + std::to_string(t) + " belongs to no continent");
    } else if (claims[t] > 1) {
      report.partition_ok = false;
      report.messages.push_back("territory " + std::to_string(t) + " belongs to " +
                                std::to_string(claims[t]) + " continents");
    }
  }
  return report;
}

}  // namespace riskgen
