#pragma once

#include <optional>
#include <vector>

#include "riskgen/map_graph.hpp"

namespace riskgen {

/// Finds a vertex bijection mapping a's edges onto b's edges, if one exists.
/// State-space search in the VF2 style: candidates are restricted by iterated
/// degree refinement and each partial mapping is kept edge-consistent.
std::optional<std::vector<TerritoryId>> find_isomorphism(int vertex_count_a,
                                                         const std::vector<Edge>& edges_a,
                                                         int vertex_count_b,
                                                         const std::vector<Edge>& edges_b);

/// Unlabeled graph isomorphism; continents and bonuses are ignored.
bool are_isomorphic(const MapGraph& a, const MapGraph& b);

/// Groups maps into isomorphism classes. Returns the class id of each input,
/// numbered in order of first appearance.
std::vector<int> isomorphism_classes(const std::vector<MapGraph>& maps);

}  // namespace riskgen
