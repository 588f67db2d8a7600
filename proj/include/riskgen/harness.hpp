#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riskgen/evolution.hpp"
#include "riskgen/serialization.hpp"

namespace riskgen {

// ---- evolve ---------------------------------------------------------------

struct EvolveSpec {
  GAConfig config;
  std::vector<MapGraph> seeds = {};  // empty: the built-in seed maps
};

/// Config JSON as read by config_from_json plus an optional "seed_maps" array
/// of map file paths, relative to the config file.
EvolveSpec load_evolve_spec(const std::string& path);

struct RunResult {
  GAConfig config;
  RunHistory history;
  double best_fitness = 0;
  double wall_seconds = 0;
};

/// Runs evolution and writes run.json, stats.csv, best.json, best.dot and
/// population_final.json into `out_dir` (created if needed).
RunResult cmd_evolve(const EvolveSpec& spec, const std::string& out_dir);

/// One row per generation; fixed precision so reruns are byte-identical.
std::string stats_csv(const RunHistory& history);

// ---- playtest -------------------------------------------------------------

struct PlaytestOptions {
  int matches = 100;
  int turn_cap = kDefaultTurnCap;
  int preferred_duration = kDefaultPreferredDuration;
  std::uint64_t seed = 1;
  HeuristicWeights weights;
  OptimalTargets targets;
};

struct PlaytestResult {
  CriteriaVector criteria;
  double fitness = 0;
  std::vector<MatchRecord> records;
};

PlaytestResult cmd_playtest(const GameDefinition& game, const PlaytestOptions& options);

// ---- sweep ----------------------------------------------------------------

struct SweepGrid {
  std::vector<int> generations;
  std::vector<int> offspring;
  std::optional<std::vector<int>> tournament;  // nullopt: 2, 4, ... up to half the population
  std::vector<double> mutation;
  int runs = 1;
  GAConfig base;  // everything except the four swept fields
};

/// The full grid: 10 generation counts, 10 offspring sizes, the
/// half-population tournament rule and 5 mutation rates.
SweepGrid full_sweep_grid();

/// Grid JSON: {"generations": [..], "offspring": [..], "tournament": [..] or
/// "half-population", "mutation": [..], "runs": n, "base": {config}}.
SweepGrid sweep_grid_from_json(const Json& j);

std::vector<int> tournament_sizes(const SweepGrid& grid, int offspring);

/// Number of runs the grid describes, counted without enumerating cells.
long sweep_run_count(const SweepGrid& grid);

struct SweepCell {
  int generations = 0;
  int offspring = 0;
  int tournament = 0;
  double mutation = 0;
  int run = 0;
  std::uint64_t seed = 0;
};

std::vector<SweepCell> sweep_cells(const SweepGrid& grid);

struct SweepRow {
  SweepCell cell;
  double best_fitness = 0;
  int best_territories = 0;
};

/// Runs every cell (each into out_dir/cell_NNNN) and writes ranking.csv,
/// ascending by final best fitness. Ties keep cell order.
std::vector<SweepRow> cmd_sweep(const SweepGrid& grid, const std::string& out_dir);

std::string ranking_csv(const std::vector<SweepRow>& rows);

// ---- map-stats ------------------------------------------------------------

struct MapStats {
  int population = 0;
  int class_count = 0;
  std::vector<int> class_sizes;  // by first appearance
  int min_territories = 0;
  int max_territories = 0;
  double mean_territories = 0;
  bool dominated = false;   // one class holds the whole population
  int seed_match = -1;      // seed isomorphic to the dominant class, -1 if none
  std::map<std::string, std::map<std::string, int>> param_tallies;
};

MapStats map_stats(const std::vector<Individual>& population, const std::vector<MapGraph>& seeds);
MapStats cmd_map_stats(const std::string& run_dir);
Json map_stats_to_json(const MapStats& stats);

// ---- play -----------------------------------------------------------------

/// Text game against the rule agent. The human chooses from numbered menus,
/// including setup picks and placements. Returns nullopt when the input ends
/// or the human types `quit`.
std::optional<MatchResult> run_interactive(const GameDefinition& game, std::uint64_t seed,
                                           Player human, std::istream& in, std::ostream& out,
                                           int turn_cap = kDefaultTurnCap);

std::string result_text(MatchResult result);

}  // namespace riskgen
