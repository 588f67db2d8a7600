#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "riskgen/engine.hpp"

namespace riskgen {

struct HeuristicWeights {
  double territory = 0.5;
  double troops = 0.5;
};

struct TurnLog {
  int turn_index = 0;
  std::array<double, 2> heuristic{};  // per player, at the end of the turn
  long move_count = 0;                // acting player's options at turn start
  Player leader = Player::None;

  bool operator==(const TurnLog&) const = default;
};

struct MatchRecord {
  std::vector<TurnLog> turns;
  MatchResult result = MatchResult::Draw;

  int duration() const { return static_cast<int>(turns.size()); }
  bool decisive() const { return result != MatchResult::Draw; }
  bool operator==(const MatchRecord&) const = default;
};

/// Board evaluation: territory share and troop share, weighted.
double heuristic(const GameState& state, Player player, const HeuristicWeights& weights = {});

/// The leader after a turn: higher heuristic wins, exact ties keep `previous`.
Player leader_of(const std::array<double, 2>& heuristic, Player previous);

struct MoveComponents {
  long add = 0;
  long attack = 0;
  long fortify = 0;

  long total() const { return add + attack + fortify; }
};

/// Option counts for placement, attack and fortify. `pool` is the player's
/// reinforcement troops at turn start.
MoveComponents move_components(const GameState& state, Player player, int pool);

struct CriteriaVector {
  double completion = 0;
  double duration = 0;
  double advantage = 0;
  double branching = 0;
  double drama = 0;
  double killer = 0;
  double lead = 0;

  static constexpr size_t kSize = 7;
  std::array<double, kSize> values() const {
    return {completion, duration, advantage, branching, drama, killer, lead};
  }
  static CriteriaVector from_values(const std::array<double, kSize>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
  }
  bool operator==(const CriteriaVector&) const = default;
};

inline constexpr std::array<std::string_view, CriteriaVector::kSize> kCriteriaNames = {
    "completion", "duration", "advantage", "branching", "drama", "killer", "lead"};

/// Target values; the defaults are the optimal values used for evolution.
struct OptimalTargets {
  CriteriaVector values{1.0, 0.0, 0.0, 0.5, 0.5, 0.5, 0.5};
};

inline constexpr int kDefaultPreferredDuration = 24;

double completion(std::span<const MatchRecord> records);
/// Mean relative distance from the preferred length, each game capped at 1.
/// Drawn games count as 1.
double duration(std::span<const MatchRecord> records, int preferred = kDefaultPreferredDuration);
double advantage(std::span<const MatchRecord> records);
double branching_factor(std::span<const MatchRecord> records);
double drama(std::span<const MatchRecord> records);
double killer_moves(std::span<const MatchRecord> records);
double lead_change(std::span<const MatchRecord> records);

CriteriaVector evaluate_criteria(std::span<const MatchRecord> records,
                                 int preferred_duration = kDefaultPreferredDuration);

/// L1 distance to the targets; lower is better.
double fitness(const CriteriaVector& criteria, const OptimalTargets& targets = {});

}  // namespace riskgen
