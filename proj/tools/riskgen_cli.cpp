// riskgen command line: evolution runs, playtests, sweeps and map utilities.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "riskgen/harness.hpp"
#include "riskgen/isomorphism.hpp"
#include "riskgen/map_io.hpp"
#include "riskgen/seed_maps.hpp"

namespace fs = std::filesystem;
using namespace riskgen;

namespace {

void print_report(const ValidationReport& r) {
  std::cout << "planar: " << (r.planar ? "true" : "false") << "\n"
            << "connected: " << (r.connected ? "true" : "false") << "\n"
            << "partition_ok: " << (r.partition_ok ? "true" : "false") << "\n";
  for (const auto& m : r.messages) std::cout << "  " << m << "\n";
}

std::string slug(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolve two-player Risk variants: rules and planar maps"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  std::optional<std::uint64_t> evolve_seed;
  std::optional<int> evolve_threads;
  auto* evolve = app.add_subcommand("evolve", "Run the genetic algorithm");
  evolve->add_option("--config", config_path, "GA config JSON")->required()->check(CLI::ExistingFile);
  evolve->add_option("--out", out_dir, "Output directory")->required();
  evolve->add_option("--seed", evolve_seed, "Override the master seed");
  evolve->add_option("--threads", evolve_threads, "Evaluation threads (0: all cores)");

  std::string game_path, playtest_out, playtest_log;
  PlaytestOptions playtest_options;
  auto* playtest = app.add_subcommand("playtest", "Play J agent matches and print the criteria");
  playtest->add_option("--game", game_path, "Game definition JSON")->required()->check(CLI::ExistingFile);
  playtest->add_option("--matches", playtest_options.matches, "Matches J")->capture_default_str();
  playtest->add_option("--turn-cap", playtest_options.turn_cap, "Turn cap")->capture_default_str();
  playtest->add_option("--preferred-duration", playtest_options.preferred_duration,
                       "Preferred duration in turns")->capture_default_str();
  playtest->add_option("--seed", playtest_options.seed, "Seed")->capture_default_str();
  playtest->add_option("--out", playtest_out, "Also write the criteria JSON here");
  playtest->add_option("--log", playtest_log, "Write match records as JSON lines");

  std::string grid_path, sweep_out;
  bool count_only = false;
  auto* sweep = app.add_subcommand("sweep", "Run a hyperparameter grid and rank the cells");
  sweep->add_option("--grid", grid_path, "Grid JSON")->check(CLI::ExistingFile);
  sweep->add_option("--out", sweep_out, "Output directory");
  sweep->add_flag("--count-only", count_only,
                  "Print the number of runs without executing (the full grid without --grid)");

  std::string run_dir;
  auto* stats = app.add_subcommand("map-stats", "Isomorphism classes and sizes of final maps");
  stats->add_option("--run", run_dir, "Run directory")->required()->check(CLI::ExistingDirectory);

  std::string play_game;
  int human = 1;
  std::uint64_t play_seed = 1;
  int play_cap = kDefaultTurnCap;
  auto* play = app.add_subcommand("play", "Play against the rule agent");
  play->add_option("--game", play_game, "Game definition JSON")->required()->check(CLI::ExistingFile);
  play->add_option("--as", human, "Seat 1 or 2")->check(CLI::IsMember({1, 2}))->capture_default_str();
  play->add_option("--seed", play_seed, "Seed")->capture_default_str();
  play->add_option("--turn-cap", play_cap, "Turn cap")->capture_default_str();

  std::string dot_map;
  auto* dot = app.add_subcommand("export-dot", "Print a map as Graphviz DOT");
  dot->add_option("--map", dot_map, "Map JSON")->required()->check(CLI::ExistingFile);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a map file");
  validate->add_option("--map", validate_path, "Map JSON")->required()->check(CLI::ExistingFile);

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("isomorphic", "Compare two maps as unlabeled graphs");
  iso->add_option("--a", iso_a, "First map")->required()->check(CLI::ExistingFile);
  iso->add_option("--b", iso_b, "Second map")->required()->check(CLI::ExistingFile);

  std::string seed_dir = "data";
  auto* seeds = app.add_subcommand("seed-maps", "Write the built-in seed maps and classic game");
  seeds->add_option("--out", seed_dir, "Data directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*evolve) {
      EvolveSpec spec = load_evolve_spec(config_path);
      if (evolve_seed) spec.config.master_seed = *evolve_seed;
      if (evolve_threads) spec.config.threads = *evolve_threads;
      const RunResult result = cmd_evolve(spec, out_dir);
      std::cout << "best fitness " << result.best_fitness << " with "
                << result.history.best.map.territory_count << " territories ("
                << result.wall_seconds << " s)\n";
    } else if (*playtest) {
      const PlaytestResult result = cmd_playtest(load_game_file(game_path), playtest_options);
      const std::string text = criteria_to_json(result.criteria, result.fitness).dump(2) + "\n";
      std::cout << text;
      if (!playtest_out.empty()) write_text_file(playtest_out, text);
      if (!playtest_log.empty()) write_text_file(playtest_log, save_records_jsonl(result.records));
    } else if (*sweep) {
      if (grid_path.empty()) {
        if (!count_only) throw CLI::ValidationError("--grid", "is required");
        std::cout << sweep_run_count(full_sweep_grid()) << "\n";
        return 0;
      }
      const SweepGrid grid = sweep_grid_from_json(parse_json(read_text_file(grid_path), "grid"));
      if (count_only) {
        std::cout << sweep_run_count(grid) << "\n";
      } else {
        if (sweep_out.empty()) throw CLI::ValidationError("--out", "is required");
        std::cout << ranking_csv(cmd_sweep(grid, sweep_out));
      }
    } else if (*stats) {
      std::cout << map_stats_to_json(cmd_map_stats(run_dir)).dump(2) << "\n";
    } else if (*play) {
      const auto result = run_interactive(load_game_file(play_game), play_seed,
                                          human == 1 ? Player::One : Player::Two, std::cin,
                                          std::cout, play_cap);
      return result ? 0 : 3;
    } else if (*dot) {
      std::cout << export_dot(load_map_file(dot_map));
    } else if (*validate) {
      try {
        print_report(validate_map(load_map_file(validate_path)));
      } catch (const MapValidationError& e) {
        print_report(e.report());
        return 1;
      }
    } else if (*iso) {
      std::cout << (are_isomorphic(load_map_file(iso_a), load_map_file(iso_b)) ? "true" : "false")
                << "\n";
    } else if (*seeds) {
      fs::create_directories(fs::path(seed_dir) / "maps");
      fs::create_directories(fs::path(seed_dir) / "games");
      for (const auto& m : seed_maps()) {
        save_map_file(m, (fs::path(seed_dir) / "maps" / (slug(m.name) + ".json")).string());
      }
      write_text_file((fs::path(seed_dir) / "games" / "classic.json").string(),
                      save_game(GameDefinition{GameParams::classic(), classic_map()}));
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
