#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "riskgen/engine.hpp"
#include "riskgen/metrics.hpp"

namespace riskgen {

/// The evolvable genome: rule attributes plus map. Criteria and fitness are
/// filled by evaluate().
struct Individual {
  GameParams params;
  MapGraph map;
  std::optional<CriteriaVector> criteria;
  std::optional<double> fitness;

  bool same_genome(const Individual& other) const {
    return params == other.params && map.structurally_equal(other.map);
  }
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GAConfig {
  int generations = 10;
  int offspring_size = 20;
  int tournament_k = 4;
  double mutation_rate = 0.2;
  int matches_per_eval = 100;
  int turn_cap = kDefaultTurnCap;
  int preferred_duration = kDefaultPreferredDuration;
  std::uint64_t master_seed = 1;
  int threads = 0;  // 0: hardware concurrency
  OptimalTargets targets;
  HeuristicWeights weights;
};

/// Throws ConfigError naming the first offending field.
void check_config(const GAConfig& config);

struct GenerationStats {
  int generation = 0;
  double best_fitness = 0;
  double mean_fitness = 0;
  Individual best;
  std::vector<CriteriaVector> criteria;  // per individual, population order
};

/// Attribute values drawn uniformly from their domains.
GameParams random_params(Rng& rng);

std::vector<Individual> init_population(const GAConfig& config, const std::vector<MapGraph>& seeds,
                                        Rng& rng);

/// Plays the playtest for one individual. `identity` distinguishes evaluation
/// slots (generation and index); match seeds derive from it and the master seed.
void evaluate(Individual& individual, const GAConfig& config, std::uint64_t identity);

/// Evaluates every member, in parallel when config.threads allows. Results do
/// not depend on the thread count.
void evaluate_population(std::vector<Individual>& population, const GAConfig& config,
                         int generation);

/// Tournament of k distinct members; returns the indices of the two lowest
/// fitness values, ties going to the lower population index.
std::pair<size_t, size_t> select_parents(const std::vector<Individual>& population, int k,
                                         Rng& rng);

/// Map half of crossover: a non-empty continent subset from each parent,
/// re-indexed and joined by planarity-preserving bridge edges. Identical
/// parent maps reproduce the parent map.
MapGraph crossover_maps(const MapGraph& a, const MapGraph& b, Rng& rng);

/// Connects components of `map` by adding, for each pair of components, the
/// closest-id edge that keeps the graph planar.
void bridge_components(MapGraph& map);

std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b, Rng& rng);

enum class MapMutation { AddEdge, RemoveEdge, MoveTerritory, SwapBonus, AdjustBonus };
inline constexpr int kMapMutationRetries = 10;

/// Applies one map operator; retries with fresh random choices when the
/// result is invalid; returns false and leaves the map unchanged if every
/// attempt fails.
bool mutate_map(MapGraph& map, MapMutation op, Rng& rng);

Individual mutate(const Individual& individual, double rate, Rng& rng);

/// Lowest fitness, lowest index on ties.
size_t best_index(const std::vector<Individual>& population);

GenerationStats make_stats(const std::vector<Individual>& population, int generation);

/// Elite copy plus offspring, all re-evaluated for `generation`.
std::pair<std::vector<Individual>, GenerationStats> step_generation(
    const std::vector<Individual>& population, const GAConfig& config, int generation, Rng& rng);

struct RunHistory {
  std::vector<GenerationStats> generations;
  Individual best;  // best of the final generation
  std::vector<Individual> final_population;
};

RunHistory run(const GAConfig& config, const std::vector<MapGraph>& seeds);
RunHistory run(const GAConfig& config);

}  // namespace riskgen
