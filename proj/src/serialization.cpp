#include "riskgen/serialization.hpp"

#include <sstream>

#include "riskgen/map_io.hpp"

namespace riskgen {

namespace {

const Json& field(const Json& j, const char* key, const char* owner) {
  if (!j.is_object()) throw FormatError(std::string(owner) + " must be a JSON object");
  if (!j.contains(key)) {
    throw FormatError(std::string(owner) + " is missing field '" + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* key, const char* owner) {
  const Json& v = field(j, key, owner);
  try {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw FormatError("");
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw FormatError("");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw FormatError("");
    }
    return v.get<T>();
  } catch (const std::exception&) {
    throw FormatError(std::string(owner) + " field '" + key + "' has the wrong type");
  }
}

const char* result_name(MatchResult r) {
  switch (r) {
    case MatchResult::Player1Wins:
      return "player1";
    case MatchResult::Player2Wins:
      return "player2";
    case MatchResult::Draw:
      break;
  }
  return "draw";
}

MatchResult result_from_name(const std::string& s) {
  if (s == "player1") return MatchResult::Player1Wins;
  if (s == "player2") return MatchResult::Player2Wins;
  if (s == "draw") return MatchResult::Draw;
  throw FormatError("unknown match result '" + s + "'");
}

}  // namespace

Json parse_json(std::string_view text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(what + " is not valid JSON: " + e.what());
  }
}

Json map_to_json(const MapGraph& map) { return Json::parse(save_map(map)); }

MapGraph map_from_json(const Json& j) { return load_map(j.dump()); }

Json params_to_json(const GameParams& p) {
  return Json{{"random_distribution", p.random_distribution},
              {"defensive_dice", p.defensive_dice},
              {"move_max_on_conquest", p.move_max_on_conquest},
              {"bonus_factor", p.bonus_factor}};
}

GameParams params_from_json(const Json& j) {
  GameParams p;
  p.random_distribution = get_as<bool>(j, "random_distribution", "params");
  p.defensive_dice = get_as<int>(j, "defensive_dice", "params");
  p.move_max_on_conquest = get_as<bool>(j, "move_max_on_conquest", "params");
  p.bonus_factor = get_as<int>(j, "bonus_factor", "params");
  try {
    check_params(p);
  } catch (const RuleError& e) {
    throw FormatError(e.what());
  }
  return p;
}

Json game_to_json(const GameDefinition& game) {
  return Json{{"params", params_to_json(game.params)}, {"map", map_to_json(game.map)}};
}

GameDefinition game_from_json(const Json& j) {
  GameDefinition game;
  game.params = params_from_json(field(j, "params", "game definition"));
  game.map = map_from_json(field(j, "map", "game definition"));
  return game;
}

std::string save_game(const GameDefinition& game) { return game_to_json(game).dump(2) + "\n"; }

GameDefinition load_game(std::string_view text) {
  return game_from_json(parse_json(text, "game definition"));
}

GameDefinition load_game_file(const std::string& path) { return load_game(read_text_file(path)); }

Json criteria_to_json(const CriteriaVector& criteria, double fitness_value) {
  Json j = Json::object();
  const auto v = criteria.values();
  for (size_t i = 0; i < v.size(); ++i) j[std::string(kCriteriaNames[i])] = v[i];
  j["fitness"] = fitness_value;
  return j;
}

CriteriaVector criteria_from_json(const Json& j) {
  std::array<double, CriteriaVector::kSize> v{};
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] = get_as<double>(j, std::string(kCriteriaNames[i]).c_str(), "criteria");
  }
  return CriteriaVector::from_values(v);
}

Json record_to_json(const MatchRecord& record) {
  Json turns = Json::array();
  for (const auto& t : record.turns) {
    turns.push_back(Json{{"turn", t.turn_index},
                         {"h", Json::array({t.heuristic[0], t.heuristic[1]})},
                         {"moves", t.move_count},
                         {"leader", static_cast<int>(t.leader)}});
  }
  return Json{{"result", result_name(record.result)}, {"turns", std::move(turns)}};
}

MatchRecord record_from_json(const Json& j) {
  MatchRecord r;
  r.result = result_from_name(get_as<std::string>(j, "result", "match record"));
  const Json& turns = field(j, "turns", "match record");
  if (!turns.is_array()) throw FormatError("match record 'turns' must be an array");
  for (const auto& t : turns) {
    TurnLog log;
    log.turn_index = get_as<int>(t, "turn", "turn log");
    const Json& h = field(t, "h", "turn log");
    if (!h.is_array() || h.size() != 2) throw FormatError("turn log 'h' must hold two numbers");
    log.heuristic = {h[0].get<double>(), h[1].get<double>()};
    log.move_count = get_as<long>(t, "moves", "turn log");
    const int leader = get_as<int>(t, "leader", "turn log");
    if (leader < 0 || leader > 2) throw FormatError("turn log 'leader' must be 0, 1 or 2");
    log.leader = static_cast<Player>(leader);
    r.turns.push_back(log);
  }
  return r;
}

std::string save_records_jsonl(const std::vector<MatchRecord>& records) {
  std::string out;
  for (const auto& r : records) out += record_to_json(r).dump() + "\n";
  return out;
}

std::vector<MatchRecord> load_records_jsonl(std::string_view text) {
  std::vector<MatchRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    records.push_back(record_from_json(parse_json(line, "match record line")));
  }
  return records;
}

Json config_to_json(const GAConfig& c) {
  Json targets = Json::object();
  const auto v = c.targets.values.values();
  for (size_t i = 0; i < v.size(); ++i) targets[std::string(kCriteriaNames[i])] = v[i];
  return Json{{"generations", c.generations},
              {"offspring_size", c.offspring_size},
              {"tournament_k", c.tournament_k},
              {"mutation_rate", c.mutation_rate},
              {"matches_per_eval", c.matches_per_eval},
              {"turn_cap", c.turn_cap},
              {"preferred_duration", c.preferred_duration},
              {"master_seed", c.master_seed},
              {"threads", c.threads},
              {"targets", std::move(targets)},
              {"weights", Json{{"territory", c.weights.territory}, {"troops", c.weights.troops}}}};
}

GAConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("config must be a JSON object");
  GAConfig c;
  for (const auto& [key, value] : j.items()) {
    const char* k = key.c_str();
    if (key == "generations") {
      c.generations = get_as<int>(j, k, "config");
    } else if (key == "offspring_size") {
      c.offspring_size = get_as<int>(j, k, "config");
    } else if (key == "tournament_k") {
      c.tournament_k = get_as<int>(j, k, "config");
    } else if (key == "mutation_rate") {
      c.mutation_rate = get_as<double>(j, k, "config");
    } else if (key == "matches_per_eval") {
      c.matches_per_eval = get_as<int>(j, k, "config");
    } else if (key == "turn_cap") {
      c.turn_cap = get_as<int>(j, k, "config");
    } else if (key == "preferred_duration") {
      c.preferred_duration = get_as<int>(j, k, "config");
    } else if (key == "master_seed") {
      if (!value.is_number_unsigned()) throw FormatError("config field 'master_seed' must be unsigned");
      c.master_seed = value.get<std::uint64_t>();
    } else if (key == "threads") {
      c.threads = get_as<int>(j, k, "config");
    } else if (key == "targets") {
      c.targets.values = criteria_from_json(value);
    } else if (key == "weights") {
      c.weights.territory = get_as<double>(value, "territory", "weights");
      c.weights.troops = get_as<double>(value, "troops", "weights");
    } else {
      throw FormatError("unknown config field '" + key + "'");
    }
  }
  return c;
}

Json individual_to_json(const Individual& ind) {
  Json j = game_to_json(GameDefinition{ind.params, ind.map});
  if (ind.criteria && ind.fitness) j["criteria"] = criteria_to_json(*ind.criteria, *ind.fitness);
  return j;
}

Individual individual_from_json(const Json& j) {
  const GameDefinition game = game_from_json(j);
  Individual ind{game.params, game.map, std::nullopt, std::nullopt};
  if (j.contains("criteria")) {
    ind.criteria = criteria_from_json(j.at("criteria"));
    ind.fitness = get_as<double>(j.at("criteria"), "fitness", "criteria");
  }
  return ind;
}

Json population_to_json(const std::vector<Individual>& population) {
  Json members = Json::array();
  for (const auto& ind : population) members.push_back(individual_to_json(ind));
  return Json{{"individuals", std::move(members)}};
}

std::vector<Individual> population_from_json(const Json& j) {
  const Json& members = field(j, "individuals", "population");
  if (!members.is_array()) throw FormatError("population 'individuals' must be an array");
  std::vector<Individual> out;
  for (const auto& m : members) out.push_back(individual_from_json(m));
  return out;
}

}  // namespace riskgen
