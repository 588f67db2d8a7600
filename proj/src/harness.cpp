#include "riskgen/harness.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>

#include "riskgen/isomorphism.hpp"
#include "riskgen/map_io.hpp"
#include "riskgen/match.hpp"
#include "riskgen/seed_maps.hpp"

namespace riskgen {

namespace fs = std::filesystem;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<int> int_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).empty()) {
    throw FormatError(std::string("grid field '") + key + "' must be a non-empty array");
  }
  std::vector<int> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer()) throw FormatError(std::string("grid field '") + key + "' holds a non-integer");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

EvolveSpec load_evolve_spec(const std::string& path) {
  Json j = parse_json(read_text_file(path), "config " + path);
  EvolveSpec spec;
  if (j.is_object() && j.contains("seed_maps")) {
    const fs::path base = fs::path(path).parent_path();
    for (const auto& entry : j.at("seed_maps")) {
      if (!entry.is_string()) throw FormatError("config 'seed_maps' entries must be paths");
      spec.seeds.push_back(load_map_file((base / entry.get<std::string>()).string()));
    }
    j.erase("seed_maps");
  }
  spec.config = config_from_json(j);
  return spec;
}

std::string stats_csv(const RunHistory& history) {
  std::string out =
      "generation,best_fitness,mean_fitness,best_map_territories,random_distribution,"
      "defensive_dice,move_max_on_conquest,bonus_factor";
  for (auto name : kCriteriaNames) out += fmt::format(",best_{}", name);
  out += "\n";
  for (const auto& g : history.generations) {
    const GameParams& p = g.best.params;
    out += fmt::format("{},{:.6f},{:.6f},{},{},{},{},{}", g.generation, g.best_fitness,
                       g.mean_fitness, g.best.map.territory_count, int(p.random_distribution),
                       p.defensive_dice, int(p.move_max_on_conquest), p.bonus_factor);
    for (double v : g.best.criteria.value().values()) out += fmt::format(",{:.6f}", v);
    out += "\n";
  }
  return out;
}

RunResult cmd_evolve(const EvolveSpec& spec, const std::string& out_dir) {
  check_config(spec.config);
  const std::vector<MapGraph> seeds = spec.seeds.empty() ? seed_maps() : spec.seeds;
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  result.config = spec.config;
  result.history = run(spec.config, seeds);
  result.best_fitness = result.history.best.fitness.value();
  result.wall_seconds = seconds_since(start);

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  Json seed_json = Json::array();
  for (const auto& m : seeds) seed_json.push_back(map_to_json(m));
  const Json run_json{{"config", config_to_json(spec.config)},
                      {"seed_maps", std::move(seed_json)},
                      {"best_fitness", result.best_fitness},
                      {"wall_seconds", result.wall_seconds}};
  write_text_file((dir / "run.json").string(), run_json.dump(2) + "\n");
  write_text_file((dir / "stats.csv").string(), stats_csv(result.history));
  write_text_file((dir / "best.json").string(), individual_to_json(result.history.best).dump(2) + "\n");
  write_text_file((dir / "best.dot").string(), export_dot(result.history.best.map));
  write_text_file((dir / "population_final.json").string(),
                  population_to_json(result.history.final_population).dump(2) + "\n");
  return result;
}

PlaytestResult cmd_playtest(const GameDefinition& game, const PlaytestOptions& options) {
  if (options.matches < 1) throw ConfigError("matches must be at least 1");
  if (options.turn_cap < 1) throw ConfigError("turn cap must be at least 1");
  if (options.preferred_duration < 1) throw ConfigError("preferred duration must be at least 1");
  check_params(game.params);
  auto board = std::make_shared<const Board>(game.map);
  MatchOptions match_options{options.turn_cap, options.weights};
  PlaytestResult result;
  for (int j = 0; j < options.matches; ++j) {
    const auto seed = derive_seed({options.seed, static_cast<std::uint64_t>(j)});
    result.records.push_back(play_match(board, game.params, seed, match_options));
  }
  result.criteria = evaluate_criteria(result.records, options.preferred_duration);
  result.fitness = fitness(result.criteria, options.targets);
  return result;
}

SweepGrid full_sweep_grid() {
  SweepGrid grid;
  for (int g = 10; g <= 190; g += 20) grid.generations.push_back(g);
  for (int o = 5; o <= 50; o += 5) grid.offspring.push_back(o);
  grid.mutation = {0.1, 0.2, 0.4, 0.6, 0.8};
  return grid;
}

SweepGrid sweep_grid_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("grid must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    static const std::vector<std::string> known = {"generations", "offspring", "tournament",
                                                   "mutation",    "runs",      "base"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw FormatError("unknown grid field '" + key + "'");
    }
  }
  SweepGrid grid;
  grid.generations = int_list(j, "generations");
  grid.offspring = int_list(j, "offspring");
  if (j.contains("tournament") && !(j.at("tournament").is_string() &&
                                    j.at("tournament").get<std::string>() == "half-population")) {
    grid.tournament = int_list(j, "tournament");
  }
  if (!j.contains("mutation") || !j.at("mutation").is_array() || j.at("mutation").empty()) {
    throw FormatError("grid field 'mutation' must be a non-empty array");
  }
  for (const auto& v : j.at("mutation")) {
    if (!v.is_number()) throw FormatError("grid field 'mutation' holds a non-number");
    grid.mutation.push_back(v.get<double>());
  }
  if (j.contains("runs")) {
    if (!j.at("runs").is_number_integer() || j.at("runs").get<int>() < 1) {
      throw FormatError("grid field 'runs' must be a positive integer");
    }
    grid.runs = j.at("runs").get<int>();
  }
  if (j.contains("base")) grid.base = config_from_json(j.at("base"));
  return grid;
}

std::vector<int> tournament_sizes(const SweepGrid& grid, int offspring) {
  std::vector<int> sizes;
  if (grid.tournament) {
    for (int k : *grid.tournament) {
      if (k <= offspring) sizes.push_back(k);
    }
    return sizes;
  }
  for (int k = 2; k <= std::max(2, offspring / 2); k += 2) sizes.push_back(k);
  return sizes;
}

long sweep_run_count(const SweepGrid& grid) {
  long per_generation = 0;
  for (int o : grid.offspring) per_generation += static_cast<long>(tournament_sizes(grid, o).size());
  return static_cast<long>(grid.generations.size()) * per_generation *
         static_cast<long>(grid.mutation.size()) * grid.runs;
}

std::vector<SweepCell> sweep_cells(const SweepGrid& grid) {
  std::vector<SweepCell> cells;
  for (int g : grid.generations) {
    for (int o : grid.offspring) {
      for (int k : tournament_sizes(grid, o)) {
        for (double m : grid.mutation) {
          for (int r = 0; r < grid.runs; ++r) {
            const auto milli = static_cast<std::uint64_t>(std::llround(m * 1000));
            const auto seed = derive_seed({grid.base.master_seed, static_cast<std::uint64_t>(g),
                                           static_cast<std::uint64_t>(o),
                                           static_cast<std::uint64_t>(k), milli,
                                           static_cast<std::uint64_t>(r)});
            cells.push_back(SweepCell{g, o, k, m, r, seed});
          }
        }
      }
    }
  }
  return cells;
}

std::vector<SweepRow> cmd_sweep(const SweepGrid& grid, const std::string& out_dir) {
  const auto cells = sweep_cells(grid);
  std::vector<SweepRow> rows;
  rows.reserve(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) {
    const SweepCell& cell = cells[i];
    EvolveSpec spec;
    spec.config = grid.base;
    spec.config.generations = cell.generations;
    spec.config.offspring_size = cell.offspring;
    spec.config.tournament_k = cell.tournament;
    spec.config.mutation_rate = cell.mutation;
    spec.config.master_seed = cell.seed;
    const auto result = cmd_evolve(spec, (fs::path(out_dir) / fmt::format("cell_{:04}", i)).string());
    rows.push_back(SweepRow{cell, result.best_fitness, result.history.best.map.territory_count});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return a.best_fitness < b.best_fitness;
  });
  write_text_file((fs::path(out_dir) / "ranking.csv").string(), ranking_csv(rows));
  return rows;
}

std::string ranking_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "rank,generations,offspring,tournament,mutation,run,seed,best_fitness,best_map_territories\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& c = rows[i].cell;
    out += fmt::format("{},{},{},{},{:.2f},{},{},{:.6f},{}\n", i + 1, c.generations, c.offspring,
                       c.tournament, c.mutation, c.run, c.seed, rows[i].best_fitness,
                       rows[i].best_territories);
  }
  return out;
}

MapStats map_stats(const std::vector<Individual>& population, const std::vector<MapGraph>& seeds) {
  MapStats s;
  s.population = static_cast<int>(population.size());
  if (population.empty()) return s;
  std::vector<MapGraph> maps;
  for (const auto& ind : population) maps.push_back(ind.map);
  const auto classes = isomorphism_classes(maps);
  s.class_count = *std::max_element(classes.begin(), classes.end()) + 1;
  s.class_sizes.assign(static_cast<size_t>(s.class_count), 0);
  for (int c : classes) ++s.class_sizes[c];
  s.dominated = s.class_count == 1;

  s.min_territories = s.max_territories = maps.front().territory_count;
  double total = 0;
  for (const auto& m : maps) {
    s.min_territories = std::min(s.min_territories, m.territory_count);
    s.max_territories = std::max(s.max_territories, m.territory_count);
    total += m.territory_count;
  }
  s.mean_territories = total / static_cast<double>(maps.size());

  if (s.dominated) {
    for (size_t i = 0; i < seeds.size(); ++i) {
      if (are_isomorphic(seeds[i], maps.front())) {
        s.seed_match = static_cast<int>(i);
        break;
      }
    }
  }

  for (const auto& ind : population) {
    const GameParams& p = ind.params;
    ++s.param_tallies["random_distribution"][p.random_distribution ? "true" : "false"];
    ++s.param_tallies["defensive_dice"][std::to_string(p.defensive_dice)];
    ++s.param_tallies["move_max_on_conquest"][p.move_max_on_conquest ? "true" : "false"];
    ++s.param_tallies["bonus_factor"][std::to_string(p.bonus_factor)];
  }
  return s;
}

MapStats cmd_map_stats(const std::string& run_dir) {
  const fs::path dir(run_dir);
  const auto population = population_from_json(
      parse_json(read_text_file((dir / "population_final.json").string()), "population_final.json"));
  std::vector<MapGraph> seeds;
  const fs::path run_file = dir / "run.json";
  if (fs::exists(run_file)) {
    const Json run_json = parse_json(read_text_file(run_file.string()), "run.json");
    if (run_json.contains("seed_maps")) {
      for (const auto& m : run_json.at("seed_maps")) seeds.push_back(map_from_json(m));
    }
  }
  return map_stats(population, seeds);
}

Json map_stats_to_json(const MapStats& s) {
  Json tallies = Json::object();
  for (const auto& [name, counts] : s.param_tallies) {
    Json c = Json::object();
    for (const auto& [value, n] : counts) c[value] = n;
    tallies[name] = std::move(c);
  }
  return Json{{"population", s.population},
              {"classes", s.class_count},
              {"class_sizes", s.class_sizes},
              {"min_territories", s.min_territories},
              {"max_territories", s.max_territories},
              {"mean_territories", s.mean_territories},
              {"dominated", s.dominated},
              {"seed_match", s.seed_match},
              {"param_tallies", std::move(tallies)}};
}

std::string result_text(MatchResult result) {
  switch (result) {
    case MatchResult::Player1Wins:
      return "player 1 wins";
    case MatchResult::Player2Wins:
      return "player 2 wins";
    case MatchResult::Draw:
      break;
  }
  return "draw";
}

}  // namespace riskgen
