#pragma once

#include <vector>

#include "riskgen/map_graph.hpp"

namespace riskgen {

/// The classic 42-territory board: six continents, bonuses 5,2,5,3,7,2.
MapGraph classic_map();

/// Ten initial-population maps. Entries 0-4 have 42 territories in six
/// continents (entry 0 is the classic board); entries 5-9 are small boards of
/// 9, 11, 13, 15 and 17 territories.
std::vector<MapGraph> seed_maps();

}  // namespace riskgen
