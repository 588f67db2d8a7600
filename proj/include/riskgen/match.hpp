#pragma once

#include <cstdint>
#include <memory>

#include "riskgen/agent.hpp"
#include "riskgen/metrics.hpp"

namespace riskgen {

struct MatchOptions {
  int turn_cap = kDefaultTurnCap;
  HeuristicWeights weights;
};

/// One agent-vs-agent match with per-turn logging. Deterministic in the seed.
MatchRecord play_match(std::shared_ptr<const Board> board, const GameParams& params,
                       std::uint64_t seed, const MatchOptions& options = {});

/// Appends one TurnLog per completed (or final partial) turn while `step`
/// drives the state forward. Used by the agent match and interactive play.
class TurnRecorder {
 public:
  explicit TurnRecorder(HeuristicWeights weights) : weights_(weights) {}

  /// Call before every move.
  void before_move(const GameState& state);
  /// Call after every move.
  void after_move(const GameState& state);

  MatchRecord finish(MatchResult result);

 private:
  HeuristicWeights weights_;
  MatchRecord record_;
  int logged_turn_ = -1;  // turn whose move count has been sampled
  long pending_moves_ = 0;
  Player leader_ = Player::None;
};

}  // namespace riskgen
