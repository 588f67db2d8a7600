#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riskgen {

using TerritoryId = std::int32_t;
using Edge = std::pair<TerritoryId, TerritoryId>;

struct Continent {
  std::string name;
  int bonus = 0;
  std::vector<TerritoryId> territories;

  bool operator==(const Continent&) const = default;
};

/// Territory graph partitioned into continents.
///
/// Edges are stored canonically: each pair has first < second and the list is
/// sorted lexicographically. Use `canonicalize()` after editing edges by hand.
struct MapGraph {
  std::string name;
  int territory_count = 0;
  std::vector<Edge> edges;
  std::vector<Continent> continents;

  /// Sorts edge endpoints, the edge list and each continent's territory list.
  void canonicalize();

  bool has_edge(TerritoryId a, TerritoryId b) const;

  std::vector<std::vector<TerritoryId>> adjacency() const;

  /// Continent index per territory; -1 where no continent claims it.
  std::vector<int> continent_index() const;

  /// Same territory count, edge set, continents and bonuses. Names ignored.
  bool structurally_equal(const MapGraph& other) const;
};

/// Raised when a map is malformed (dangling ids, self loops, duplicate edges)
/// or fails validation where a valid map is required.
class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValidationReport {
  bool planar = false;
  bool connected = false;
  bool partition_ok = false;
  std::vector<std::string> messages;

  bool valid() const { return planar && connected && partition_ok; }
};

/// Throws MapError listing every structural defect. Accepts unsorted input.
void check_structure(const MapGraph& map);

/// Structural check followed by planarity, connectivity and partition tests.
ValidationReport validate_map(const MapGraph& map);

bool is_connected(int vertex_count, const std::vector<Edge>& edges);

/// Number of connected components, with a component label per vertex.
int connected_components(int vertex_count, const std::vector<Edge>& edges,
                         std::vector<int>& label);

}  // namespace riskgen
