#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "riskgen/evolution.hpp"

namespace riskgen {

using Json = nlohmann::ordered_json;

/// A file that parses but does not match the expected shape.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json map_to_json(const MapGraph& map);
MapGraph map_from_json(const Json& j);

Json params_to_json(const GameParams& params);
GameParams params_from_json(const Json& j);

struct GameDefinition {
  GameParams params;
  MapGraph map;
};

Json game_to_json(const GameDefinition& game);
GameDefinition game_from_json(const Json& j);
std::string save_game(const GameDefinition& game);
GameDefinition load_game(std::string_view text);
GameDefinition load_game_file(const std::string& path);

/// The seven criteria by name followed by `fitness`.
Json criteria_to_json(const CriteriaVector& criteria, double fitness);
CriteriaVector criteria_from_json(const Json& j);

Json record_to_json(const MatchRecord& record);
MatchRecord record_from_json(const Json& j);
/// One compact JSON object per line.
std::string save_records_jsonl(const std::vector<MatchRecord>& records);
std::vector<MatchRecord> load_records_jsonl(std::string_view text);

/// Missing keys keep their defaults; unknown keys are rejected.
Json config_to_json(const GAConfig& config);
GAConfig config_from_json(const Json& j);

Json individual_to_json(const Individual& individual);
Individual individual_from_json(const Json& j);

Json population_to_json(const std::vector<Individual>& population);
std::vector<Individual> population_from_json(const Json& j);

/// Parses JSON text, turning syntax errors into FormatError.
Json parse_json(std::string_view text, const std::string& what);

}  // namespace riskgen
