#include "riskgen/match.hpp"

#include <stdexcept>

namespace riskgen {

namespace {

// Generous bound on moves per match; only a broken rule could reach it.
constexpr long kMoveLimit = 5'000'000;

}  // namespace

void TurnRecorder::before_move(const GameState& state) {
  if (state.turn_index != logged_turn_) {
    logged_turn_ = state.turn_index;
    pending_moves_ = move_components(state, state.current, state.reinforcements).total();
  }
}

void TurnRecorder::after_move(const GameState& state) {
  const bool turn_over = state.turn_index != logged_turn_;
  if (!turn_over && !is_terminal(state)) return;
  TurnLog log;
  log.turn_index = logged_turn_;
  log.heuristic = {heuristic(state, Player::One, weights_), heuristic(state, Player::Two, weights_)};
  log.move_count = pending_moves_;
  leader_ = leader_of(log.heuristic, leader_);
  log.leader = leader_;
  record_.turns.push_back(log);
}

MatchRecord TurnRecorder::finish(MatchResult result) {
  record_.result = result;
  return std::move(record_);
}

MatchRecord play_match(std::shared_ptr<const Board> board, const GameParams& params,
                       std::uint64_t seed, const MatchOptions& options) {
  GameState state = new_game(std::move(board), params, seed, agent::setup_policy(), options.turn_cap);
  TurnRecorder recorder(options.weights);
  long moves = 0;
  std::optional<MatchResult> result;
  while (!(result = is_terminal(state))) {
    if (++moves > kMoveLimit) throw std::logic_error("match exceeded the move limit");
    recorder.before_move(state);
    apply_move(state, agent::choose_move(state));
    recorder.after_move(state);
  }
  return recorder.finish(*result);
}

}  // namespace riskgen
