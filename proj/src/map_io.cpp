#include "riskgen/map_io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace riskgen {

namespace {

using Json = nlohmann::ordered_json;

const Json& require(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw MapError(std::string("map JSON is missing field '") + key + "'");
  }
  return object.at(key);
}

int require_int(const Json& value, const std::string& what) {
  if (!value.is_number_integer()) throw MapError(what + " must be an integer");
  return value.get<int>();
}

// Outline palette for continents and fill palette for the two players.
constexpr std::array<const char*, 12> kContinentColors = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};
constexpr std::array<const char*, 3> kOwnerFill = {"#ffffff", "#f4a6a6", "#a6c8f4"};

std::string quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

MapGraph load_map(std::string_view source) {
  Json doc;
  try {
    doc = Json::parse(source);
  } catch (const Json::parse_error& e) {
    throw MapError(std::string("map JSON parse error: ") + e.what());
  }

  MapGraph map;
  const Json& name = require(doc, "name");
  if (!name.is_string()) throw MapError("map field 'name' must be a string");
  map.name = name.get<std::string>();
  map.territory_count = require_int(require(doc, "territories"), "map field 'territories'");

  const Json& edges = require(doc, "edges");
  if (!edges.is_array()) throw MapError("map field 'edges' must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw MapError("each edge must be a 2-element array");
    map.edges.emplace_back(require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint"));
  }

  const Json& continents = require(doc, "continents");
  if (!continents.is_array()) throw MapError("map field 'continents' must be an array");
  for (const auto& c : continents) {
    Continent continent;
    const Json& cname = require(c, "name");
    if (!cname.is_string()) throw MapError("continent 'name' must be a string");
    continent.name = cname.get<std::string>();
    continent.bonus = require_int(require(c, "bonus"), "continent 'bonus'");
    const Json& members = require(c, "territories");
    if (!members.is_array()) throw MapError("continent 'territories' must be an array");
    for (const auto& t : members) continent.territories.push_back(require_int(t, "territory id"));
    map.continents.push_back(std::move(continent));
  }

  check_structure(map);
  map.canonicalize();
  auto report = validate_map(map);
  if (!report.valid()) {
    std::string what = "invalid map '" + map.name + "':";
    for (const auto& m : report.messages) what += "\n  " + m;
    throw MapValidationError(what, std::move(report));
  }
  return map;
}

MapGraph load_map_file(const std::string& path) { return load_map(read_text_file(path)); }

std::string save_map(const MapGraph& input) {
  MapGraph map = input;
  map.canonicalize();
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << Json(map.name).dump() << ",\n";
  out << "  \"territories\": " << map.territory_count << ",\n";
  out << "  \"edges\": [";
  for (size_t i = 0; i < map.edges.size(); ++i) {
    if (i) out << ", ";
    out << '[' << map.edges[i].first << ", " << map.edges[i].second << ']';
  }
  out << "],\n";
  out << "  \"continents\": [";
  for (size_t i = 0; i < map.continents.size(); ++i) {
    const auto& c = map.continents[i];
    Json entry;
    entry["name"] = c.name;
    entry["bonus"] = c.bonus;
    entry["territories"] = c.territories;
    out << (i ? ",\n    " : "\n    ") << entry.dump(-1, ' ', false);
  }
  out << (map.continents.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

void save_map_file(const MapGraph& map, const std::string& path) {
  write_text_file(path, save_map(map));
}

std::string export_dot(const MapGraph& map, const std::optional<std::vector<int>>& owners,
                       const std::optional<std::vector<int>>& troops) {
  const auto continent_of = map.continent_index();
  std::ostringstream out;
  out << "graph " << quoted(map.name.empty() ? "map" : map.name) << " {\n";
  out << "  node [shape=circle, style=filled, penwidth=3];\n";
  for (size_t c = 0; c < map.continents.size(); ++c) {
    out << "  // continent " << c << ": " << map.continents[c].name << " (bonus "
        << map.continents[c].bonus << ")\n";
  }
  for (TerritoryId t = 0; t < map.territory_count; ++t) {
    std::string label = std::to_string(t);
    if (troops) label += "(" + std::to_string(troops->at(t)) + ")";
    const int c = continent_of[t];
    const char* outline = c >= 0 ? kContinentColors[c % kContinentColors.size()] : "#000000";
    int owner = owners ? owners->at(t) : 0;
    if (owner < 0 || owner > 2) owner = 0;
    out << "  " << t << " [label=" << quoted(label) << ", color=" << quoted(outline)
        << ", fillcolor=" << quoted(kOwnerFill[owner]) << "];\n";
  }
  MapGraph canon = map;
  canon.canonicalize();
  for (const auto& [a, b] : canon.edges) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

}  // namespace riskgen
