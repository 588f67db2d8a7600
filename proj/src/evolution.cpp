#include "riskgen/evolution.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "riskgen/match.hpp"
#include "riskgen/planarity.hpp"
#include "riskgen/seed_maps.hpp"

namespace riskgen {

namespace {

constexpr std::uint64_t kPopulationStream = 0x67a;

int pick(Rng& rng, size_t count) { return uniform_int(rng, 0, static_cast<int>(count) - 1); }

// Runs body(i) for i in [0, n) on up to `threads` workers.
template <typename Body>
void parallel_for(size_t n, int threads, Body body) {
  size_t workers = threads > 0 ? static_cast<size_t>(threads) : std::thread::hardware_concurrency();
  workers = std::clamp<size_t>(workers, 1, std::max<size_t>(n, 1));
  if (workers == 1) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_lock);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

bool valid(const MapGraph& map) { return validate_map(map).valid(); }

}  // namespace

void check_config(const GAConfig& c) {
  if (c.generations < 1) throw ConfigError("generations must be at least 1");
  if (c.offspring_size < 2) throw ConfigError("offspring_size must be at least 2");
  if (c.tournament_k < 2) throw ConfigError("tournament_k must be at least 2");
  if (c.tournament_k > c.offspring_size) {
    throw ConfigError("tournament_k must not exceed offspring_size");
  }
  if (!(c.mutation_rate >= 0.0 && c.mutation_rate <= 1.0)) {
    throw ConfigError("mutation_rate must be in [0, 1]");
  }
  if (c.matches_per_eval < 1) throw ConfigError("matches_per_eval must be at least 1");
  if (c.turn_cap < 1) throw ConfigError("turn_cap must be at least 1");
  if (c.preferred_duration < 1) throw ConfigError("preferred_duration must be at least 1");
  if (c.threads < 0) throw ConfigError("threads must be non-negative");
}

GameParams random_params(Rng& rng) {
  GameParams p;
  p.random_distribution = uniform_int(rng, 0, 1) == 1;
  p.defensive_dice = uniform_int(rng, 2, 3);
  p.move_max_on_conquest = uniform_int(rng, 0, 1) == 1;
  p.bonus_factor = uniform_int(rng, 1, 4);
  return p;
}

std::vector<Individual> init_population(const GAConfig& config, const std::vector<MapGraph>& seeds,
                                        Rng& rng) {
  if (seeds.empty()) throw ConfigError("at least one seed map is required");
  std::vector<Individual> population;
  population.reserve(static_cast<size_t>(config.offspring_size));
  for (int i = 0; i < config.offspring_size; ++i) {
    Individual ind;
    ind.params = random_params(rng);
    ind.map = seeds[pick(rng, seeds.size())];
    population.push_back(std::move(ind));
  }
  return population;
}

void evaluate(Individual& individual, const GAConfig& config, std::uint64_t identity) {
  auto board = std::make_shared<const Board>(individual.map);
  MatchOptions options;
  options.turn_cap = config.turn_cap;
  options.weights = config.weights;
  std::vector<MatchRecord> records;
  records.reserve(static_cast<size_t>(config.matches_per_eval));
  for (int j = 0; j < config.matches_per_eval; ++j) {
    const auto seed = derive_seed({config.master_seed, identity, static_cast<std::uint64_t>(j)});
    records.push_back(play_match(board, individual.params, seed, options));
  }
  individual.criteria = evaluate_criteria(records, config.preferred_duration);
  individual.fitness = fitness(*individual.criteria, config.targets);
}

void evaluate_population(std::vector<Individual>& population, const GAConfig& config,
                         int generation) {
  parallel_for(population.size(), config.threads, [&](size_t i) {
    evaluate(population[i], config,
             derive_seed({static_cast<std::uint64_t>(generation), static_cast<std::uint64_t>(i)}));
  });
}

std::pair<size_t, size_t> select_parents(const std::vector<Individual>& population, int k,
                                         Rng& rng) {
  if (k < 2 || static_cast<size_t>(k) > population.size()) {
    throw ConfigError("tournament size " + std::to_string(k) + " does not fit a population of " +
                      std::to_string(population.size()));
  }
  // Partial Fisher-Yates: the first k entries become a uniform k-subset.
  std::vector<size_t> order(population.size());
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < k; ++i) {
    const int j = uniform_int(rng, i, static_cast<int>(order.size()) - 1);
    std::swap(order[i], order[j]);
  }
  std::vector<size_t> drawn(order.begin(), order.begin() + k);
  std::sort(drawn.begin(), drawn.end(), [&](size_t a, size_t b) {
    const double fa = population[a].fitness.value();
    const double fb = population[b].fitness.value();
    return fa != fb ? fa < fb : a < b;
  });
  return {drawn[0], drawn[1]};
}

void bridge_components(MapGraph& map) {
  std::vector<int> label;
  while (connected_components(map.territory_count, map.edges, label) > 1) {
    std::vector<TerritoryId> first;
    std::vector<TerritoryId> second;
    for (TerritoryId t = 0; t < map.territory_count; ++t) {
      if (label[t] == 0) first.push_back(t);
      if (label[t] == 1) second.push_back(t);
    }
    std::vector<Edge> candidates;
    for (TerritoryId u : first) {
      for (TerritoryId v : second) candidates.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(candidates.begin(), candidates.end(), [](const Edge& x, const Edge& y) {
      const int dx = x.second - x.first;
      const int dy = y.second - y.first;
      return dx != dy ? dx < dy : x < y;
    });
    bool added = false;
    for (const Edge& e : candidates) {
      map.edges.push_back(e);
      if (is_planar(map.territory_count, map.edges)) {
        added = true;
        break;
      }
      map.edges.pop_back();
    }
    // Two disjoint planar pieces always admit a planar bridge.
    if (!added) throw MapError("no planar bridge between components");
  }
  map.canonicalize();
}

MapGraph crossover_maps(const MapGraph& a, const MapGraph& b, Rng& rng) {
  if (a.structurally_equal(b)) return a;

  auto draw_subset = [&](const MapGraph& m) {
    std::vector<char> chosen(m.continents.size(), 0);
    bool any = false;
    while (!any) {
      for (auto& c : chosen) {
        c = bernoulli(rng, 0.5) ? 1 : 0;
        any = any || c;
      }
    }
    return chosen;
  };
  const auto from_a = draw_subset(a);
  const auto from_b = draw_subset(b);

  MapGraph child;
  child.name = a.name == b.name ? a.name : "Evolved";
  auto take = [&](const MapGraph& parent, const std::vector<char>& chosen) {
    std::vector<TerritoryId> remap(static_cast<size_t>(parent.territory_count), -1);
    for (size_t c = 0; c < parent.continents.size(); ++c) {
      if (!chosen[c]) continue;
      Continent copy{parent.continents[c].name, parent.continents[c].bonus, {}};
      for (TerritoryId t : parent.continents[c].territories) {
        remap[t] = child.territory_count++;
        copy.territories.push_back(remap[t]);
      }
      child.continents.push_back(std::move(copy));
    }
    for (const auto& [u, v] : parent.edges) {
      if (remap[u] >= 0 && remap[v] >= 0) child.edges.emplace_back(remap[u], remap[v]);
    }
  };
  take(a, from_a);
  take(b, from_b);
  child.canonicalize();
  bridge_components(child);
  return child;
}

std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b, Rng& rng) {
  // Exactly two of the four attributes come from each parent.
  std::array<int, 4> slots{0, 1, 2, 3};
  std::shuffle(slots.begin(), slots.end(), rng);
  std::array<bool, 4> from_a{};
  from_a[slots[0]] = true;
  from_a[slots[1]] = true;

  auto mix = [&](const GameParams& x, const GameParams& y) {
    GameParams p;
    p.random_distribution = from_a[0] ? x.random_distribution : y.random_distribution;
    p.defensive_dice = from_a[1] ? x.defensive_dice : y.defensive_dice;
    p.move_max_on_conquest = from_a[2] ? x.move_max_on_conquest : y.move_max_on_conquest;
    p.bonus_factor = from_a[3] ? x.bonus_factor : y.bonus_factor;
    return p;
  };

  const bool a_better = !b.fitness || (a.fitness && *a.fitness <= *b.fitness);
  const MapGraph& better_map = a_better ? a.map : b.map;
  auto child_map = [&](const MapGraph& first, const MapGraph& second) {
    MapGraph m = crossover_maps(first, second, rng);
    return valid(m) ? m : better_map;
  };

  Individual child_a;
  child_a.params = mix(a.params, b.params);
  child_a.map = child_map(a.map, b.map);
  Individual child_b;
  child_b.params = mix(b.params, a.params);
  child_b.map = child_map(b.map, a.map);
  return {std::move(child_a), std::move(child_b)};
}

bool mutate_map(MapGraph& map, MapMutation op, Rng& rng) {
  const size_t continents = map.continents.size();
  for (int attempt = 0; attempt <= kMapMutationRetries; ++attempt) {
    MapGraph trial = map;
    switch (op) {
      case MapMutation::AddEdge: {
        std::vector<Edge> missing;
        for (TerritoryId u = 0; u < map.territory_count; ++u) {
          for (TerritoryId v = u + 1; v < map.territory_count; ++v) {
            if (!map.has_edge(u, v)) missing.emplace_back(u, v);
          }
        }
        if (missing.empty()) return false;
        trial.edges.push_back(missing[pick(rng, missing.size())]);
        break;
      }
      case MapMutation::RemoveEdge: {
        if (map.edges.empty()) return false;
        trial.edges.erase(trial.edges.begin() + pick(rng, trial.edges.size()));
        break;
      }
      case MapMutation::MoveTerritory: {
        if (continents < 2) return false;
        const TerritoryId t = pick(rng, static_cast<size_t>(map.territory_count));
        const int from = map.continent_index()[t];
        int to = pick(rng, continents - 1);
        if (to >= from) ++to;
        auto& source = trial.continents[from].territories;
        source.erase(std::find(source.begin(), source.end(), t));
        trial.continents[to].territories.push_back(t);
        break;
      }
      case MapMutation::SwapBonus: {
        if (continents < 2) return false;
        const int x = pick(rng, continents);
        int y = pick(rng, continents - 1);
        if (y >= x) ++y;
        std::swap(trial.continents[x].bonus, trial.continents[y].bonus);
        break;
      }
      case MapMutation::AdjustBonus: {
        if (continents == 0) return false;
        auto& bonus = trial.continents[pick(rng, continents)].bonus;
        bonus += uniform_int(rng, 0, 1) == 1 ? 1 : -1;
        break;
      }
    }
    trial.canonicalize();
    if (valid(trial)) {
      map = std::move(trial);
      return true;
    }
  }
  return false;
}

Individual mutate(const Individual& individual, double rate, Rng& rng) {
  Individual out = individual;
  out.criteria.reset();
  out.fitness.reset();
  GameParams& p = out.params;
  if (bernoulli(rng, rate)) p.random_distribution = !p.random_distribution;
  if (bernoulli(rng, rate)) p.defensive_dice = p.defensive_dice == 2 ? 3 : 2;
  if (bernoulli(rng, rate)) p.move_max_on_conquest = !p.move_max_on_conquest;
  if (bernoulli(rng, rate)) {
    int factor = uniform_int(rng, 1, 3);
    if (factor >= p.bonus_factor) ++factor;
    p.bonus_factor = factor;
  }
  if (bernoulli(rng, rate)) {
    const auto op = static_cast<MapMutation>(uniform_int(rng, 0, 4));
    mutate_map(out.map, op, rng);
  }
  return out;
}

size_t best_index(const std::vector<Individual>& population) {
  size_t best = 0;
  for (size_t i = 1; i < population.size(); ++i) {
    if (population[i].fitness.value() < population[best].fitness.value()) best = i;
  }
  return best;
}

GenerationStats make_stats(const std::vector<Individual>& population, int generation) {
  GenerationStats stats;
  stats.generation = generation;
  const size_t best = best_index(population);
  stats.best = population[best];
  stats.best_fitness = population[best].fitness.value();
  double sum = 0;
  for (const auto& ind : population) {
    sum += ind.fitness.value();
    stats.criteria.push_back(ind.criteria.value());
  }
  stats.mean_fitness = sum / static_cast<double>(population.size());
  return stats;
}

std::pair<std::vector<Individual>, GenerationStats> step_generation(
    const std::vector<Individual>& population, const GAConfig& config, int generation, Rng& rng) {
  std::vector<Individual> next;
  next.reserve(static_cast<size_t>(config.offspring_size));
  Individual elite = population[best_index(population)];
  elite.criteria.reset();
  elite.fitness.reset();
  next.push_back(std::move(elite));

  while (static_cast<int>(next.size()) < config.offspring_size) {
    const auto [i, j] = select_parents(population, config.tournament_k, rng);
    auto [first, second] = crossover(population[i], population[j], rng);
    next.push_back(mutate(first, config.mutation_rate, rng));
    if (static_cast<int>(next.size()) < config.offspring_size) {
      next.push_back(mutate(second, config.mutation_rate, rng));
    }
  }

  evaluate_population(next, config, generation);
  GenerationStats stats = make_stats(next, generation);
  return {std::move(next), std::move(stats)};
}

RunHistory run(const GAConfig& config, const std::vector<MapGraph>& seeds) {
  check_config(config);
  Rng rng(derive_seed({config.master_seed, kPopulationStream}));
  std::vector<Individual> population = init_population(config, seeds, rng);
  evaluate_population(population, config, 0);

  RunHistory history;
  for (int g = 1; g <= config.generations; ++g) {
    auto [next, stats] = step_generation(population, config, g, rng);
    population = std::move(next);
    history.generations.push_back(std::move(stats));
  }
  history.best = population[best_index(population)];
  history.final_population = std::move(population);
  return history;
}

RunHistory run(const GAConfig& config) { return run(config, seed_maps()); }

}  // namespace riskgen
