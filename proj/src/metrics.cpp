#include "riskgen/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace riskgen {

namespace {

std::pair<int, int> wins(std::span<const MatchRecord> records) {
  int one = 0;
  int two = 0;
  for (const auto& r : records) {
    if (r.result == MatchResult::Player1Wins) ++one;
    if (r.result == MatchResult::Player2Wins) ++two;
  }
  return {one, two};
}

Player winner_of(const MatchRecord& r) {
  return r.result == MatchResult::Player1Wins ? Player::One : Player::Two;
}

// Winner-minus-loser evaluation per turn.
std::vector<double> margins(const MatchRecord& r) {
  const size_t w = slot(winner_of(r));
  std::vector<double> d;
  d.reserve(r.turns.size());
  for (const auto& t : r.turns) d.push_back(t.heuristic[w] - t.heuristic[1 - w]);
  return d;
}

// Mean of per-game scores over decisive games, 0 when there are none.
template <typename Score>
double decisive_mean(std::span<const MatchRecord> records, Score score) {
  double sum = 0;
  int games = 0;
  for (const auto& r : records) {
    if (!r.decisive()) continue;
    sum += score(r);
    ++games;
  }
  return games == 0 ? 0.0 : sum / games;
}

}  // namespace

double heuristic(const GameState& state, Player player, const HeuristicWeights& weights) {
  const double territories = state.territory_count();
  int own_territories = 0;
  int own_troops = 0;
  int all_troops = 0;
  for (size_t t = 0; t < state.owner.size(); ++t) {
    all_troops += state.troops[t];
    if (state.owner[t] == player) {
      ++own_territories;
      own_troops += state.troops[t];
    }
  }
  const double troop_share = all_troops > 0 ? own_troops / static_cast<double>(all_troops) : 0.0;
  return own_territories / territories * weights.territory + troop_share * weights.troops;
}

Player leader_of(const std::array<double, 2>& h, Player previous) {
  if (h[0] > h[1]) return Player::One;
  if (h[1] > h[0]) return Player::Two;
  return previous;
}

MoveComponents move_components(const GameState& state, Player player, int pool) {
  const Board& board = *state.board;
  MoveComponents m;
  int owned = 0;
  for (TerritoryId t = 0; t < state.territory_count(); ++t) {
    if (state.owner[t] != player) continue;
    ++owned;
    int enemy = 0;
    int friendly = 0;
    for (TerritoryId n : board.neighbors(t)) {
      if (state.owner[n] == player) {
        ++friendly;
      } else {
        ++enemy;
      }
    }
    const int spare = state.troops[t] - 1;
    m.attack += static_cast<long>(enemy) * std::min(3, spare);
    m.fortify += static_cast<long>(friendly) * spare;
  }
  m.add = static_cast<long>(pool) * owned;
  return m;
}

double completion(std::span<const MatchRecord> records) {
  if (records.empty()) return 0.0;
  const auto [one, two] = wins(records);
  return (one + two) / static_cast<double>(records.size());
}

double duration(std::span<const MatchRecord> records, int preferred) {
  if (records.empty()) return 0.0;
  double sum = 0;
  for (const auto& r : records) {
    // Unfinished games, and games longer than twice the preferred length,
    // score as the worst case.
    if (!r.decisive()) {
      sum += 1.0;
      continue;
    }
    sum += std::min(1.0, std::abs(preferred - r.duration()) / static_cast<double>(preferred));
  }
  return sum / static_cast<double>(records.size());
}

double advantage(std::span<const MatchRecord> records) {
  const auto [one, two] = wins(records);
  const double half = (one + two) / 2.0;
  if (half == 0.0) return 0.0;
  return std::abs(one - half) / half;
}

double branching_factor(std::span<const MatchRecord> records) {
  if (records.empty()) return 0.0;
  double sum = 0;
  for (const auto& r : records) {
    if (r.turns.empty()) continue;
    double moves = 0;
    for (const auto& t : r.turns) moves += static_cast<double>(t.move_count);
    const double mean = moves / static_cast<double>(r.turns.size());
    sum += std::min(1.0, std::log10(mean + 1.0) / 2.0);
  }
  return sum / static_cast<double>(records.size());
}

double drama(std::span<const MatchRecord> records) {
  return decisive_mean(records, [](const MatchRecord& r) {
    double sum = 0;
    int behind = 0;
    for (double d : margins(r)) {
      if (d < 0) {
        sum += std::sqrt(-d);
        ++behind;
      }
    }
    return behind == 0 ? 0.0 : sum / behind;
  });
}

double killer_moves(std::span<const MatchRecord> records) {
  return decisive_mean(records, [](const MatchRecord& r) {
    const auto d = margins(r);
    if (d.size() < 2) return 0.0;
    double best = -2.0;
    for (size_t n = 1; n < d.size(); ++n) best = std::max(best, d[n] - d[n - 1]);
    return std::clamp(best, 0.0, 1.0);
  });
}

double lead_change(std::span<const MatchRecord> records) {
  return decisive_mean(records, [](const MatchRecord& r) {
    if (r.turns.size() < 2) return 0.0;
    int changes = 0;
    for (size_t n = 1; n < r.turns.size(); ++n) {
      const Player before = r.turns[n - 1].leader;
      const Player now = r.turns[n].leader;
      if (before != Player::None && now != Player::None && before != now) ++changes;
    }
    return changes / static_cast<double>(r.turns.size() - 1);
  });
}

CriteriaVector evaluate_criteria(std::span<const MatchRecord> records, int preferred_duration) {
  CriteriaVector c;
  c.completion = completion(records);
  c.duration = duration(records, preferred_duration);
  c.advantage = advantage(records);
  c.branching = branching_factor(records);
  c.drama = drama(records);
  c.killer = killer_moves(records);
  c.lead = lead_change(records);
  return c;
}

double fitness(const CriteriaVector& criteria, const OptimalTargets& targets) {
  const auto v = criteria.values();
  const auto o = targets.values.values();
  double sum = 0;
  for (size_t i = 0; i < v.size(); ++i) sum += std::abs(v[i] - o[i]);
  return sum;
}

}  // namespace riskgen
