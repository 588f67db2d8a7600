#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "riskgen/map_graph.hpp"

namespace riskgen {

/// Raised by load_map when the input parses but the map is not valid.
class MapValidationError : public MapError {
 public:
  MapValidationError(const std::string& what, ValidationReport report)
      : MapError(what), report_(std::move(report)) {}

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Parses the map JSON format. Edge pairs and lists are canonicalized on read.
/// Throws MapError on parse or structural errors and MapValidationError when
/// validate_map rejects the result.
MapGraph load_map(std::string_view source);
MapGraph load_map_file(const std::string& path);

/// Canonical JSON text. Edges are written one sorted pair per entry on one line.
std::string save_map(const MapGraph& map);
void save_map_file(const MapGraph& map, const std::string& path);

/// Graphviz text. Node outline color marks the continent, fill marks the
/// owner (1 or 2). Labels read "id(troops)" when troop counts are supplied.
std::string export_dot(const MapGraph& map, const std::optional<std::vector<int>>& owners = {},
                       const std::optional<std::vector<int>>& troops = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace riskgen
