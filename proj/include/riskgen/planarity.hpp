#pragma once

#include <vector>

#include "riskgen/map_graph.hpp"

namespace riskgen {

/// Left-right planarity test (de Fraysseix-Rosenstiehl, Brandes' formulation).
/// Expects a simple graph: no loops or parallel edges. Runs in O(V + E log E).
bool is_planar(int vertex_count, const std::vector<Edge>& edges);

inline bool is_planar(const MapGraph& map) {
  return is_planar(map.territory_count, map.edges);
}

}  // namespace riskgen
