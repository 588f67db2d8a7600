#include "riskgen/agent.hpp"

#include <limits>

namespace riskgen::agent {

namespace {

bool borders_enemy(const GameState& state, TerritoryId t) {
  const Player me = state.owner[t];
  for (TerritoryId n : state.board->neighbors(t)) {
    if (state.owner[n] != me) return true;
  }
  return false;
}

// Weakest enemy-bordering territory owned by `player`, optionally inside one
// continent. -1 when there is none.
TerritoryId weakest_border(const GameState& state, Player player, int continent) {
  TerritoryId best = -1;
  for (TerritoryId t = 0; t < state.territory_count(); ++t) {
    if (state.owner[t] != player) continue;
    if (continent >= 0 && state.board->continent_of(t) != continent) continue;
    if (!borders_enemy(state, t)) continue;
    if (best < 0 || state.troops[t] < state.troops[best]) best = t;
  }
  return best;
}

double ratio(const Continent& c) {
  return static_cast<double>(c.bonus) / static_cast<double>(c.territories.size());
}

}  // namespace

TerritoryId choose_initial_territory(const GameState& state, Player player) {
  const auto& continents = state.board->continents();
  int best_completable = -1;
  int best_raw = -1;
  for (int c = 0; c < static_cast<int>(continents.size()); ++c) {
    bool has_free = false;
    bool blocked = false;
    for (TerritoryId t : continents[c].territories) {
      if (state.owner[t] == Player::None) has_free = true;
      if (state.owner[t] == opponent(player)) blocked = true;
    }
    if (!has_free) continue;
    if (!blocked && (best_completable < 0 || ratio(continents[c]) > ratio(continents[best_completable]))) {
      best_completable = c;
    }
    if (best_raw < 0 || continents[c].bonus > continents[best_raw].bonus) best_raw = c;
  }
  const int chosen = best_completable >= 0 ? best_completable : best_raw;
  for (TerritoryId t : continents[chosen].territories) {
    if (state.owner[t] == Player::None) return t;
  }
  return -1;  // unreachable: the chosen continent has a free territory
}

int target_continent(const GameState& state, Player player) {
  const auto& continents = state.board->continents();
  int best = -1;
  for (int c = 0; c < static_cast<int>(continents.size()); ++c) {
    bool foothold = false;
    bool complete = true;
    for (TerritoryId t : continents[c].territories) {
      if (state.owner[t] == player) {
        foothold = true;
      } else {
        complete = false;
      }
    }
    if (!foothold || complete) continue;
    if (best < 0 || ratio(continents[c]) > ratio(continents[best])) best = c;
  }
  return best;
}

TerritoryId choose_placement(const GameState& state, Player player) {
  const int target = target_continent(state, player);
  TerritoryId t = target >= 0 ? weakest_border(state, player, target) : -1;
  if (t < 0) t = weakest_border(state, player, -1);
  if (t >= 0) return t;
  // No border at all: the player holds every territory.
  for (TerritoryId x = 0; x < state.territory_count(); ++x) {
    if (state.owner[x] == player) return x;
  }
  return -1;
}

Move choose_move(const GameState& state) {
  const Player me = state.current;
  const Board& board = *state.board;
  const int total = state.territory_count();

  switch (state.phase) {
    case Phase::Reinforce: {
      const auto& hand = state.hand(me);
      const auto options = trade_options(hand);
      for (const Trade& trade : options) {
        for (TerritoryId t : trade.cards) {
          if (state.owner[t] == me) return trade;
        }
      }
      if (static_cast<int>(hand.size()) >= kMandatoryTradeHand && !options.empty()) {
        return options.front();
      }
      return Place{choose_placement(state, me), state.reinforcements};
    }
    case Phase::Attack: {
      if (state.conquered_this_turn) return EndAttack{};
      // Largest surplus first; strict advantage troops(from) - 1 > troops(to).
      int best_surplus = 0;
      Attack best{-1, -1, 0};
      for (TerritoryId from = 0; from < total; ++from) {
        if (state.owner[from] != me || state.troops[from] < 2) continue;
        for (TerritoryId to : board.neighbors(from)) {
          if (state.owner[to] == me) continue;
          const int surplus = state.troops[from] - 1 - state.troops[to];
          if (surplus > best_surplus) {
            best_surplus = surplus;
            best = Attack{from, to, std::min(3, state.troops[from] - 1)};
          }
        }
      }
      if (best.from >= 0) return best;
      return EndAttack{};
    }
    case Phase::Fortify: {
      // Interior territory with spare troops feeding its weakest border neighbour.
      TerritoryId best_from = -1;
      TerritoryId best_to = -1;
      for (TerritoryId from = 0; from < total; ++from) {
        if (state.owner[from] != me || state.troops[from] < 2 || borders_enemy(state, from)) {
          continue;
        }
        for (TerritoryId to : board.neighbors(from)) {
          if (!borders_enemy(state, to)) continue;
          const bool better =
              best_to < 0 || state.troops[to] < state.troops[best_to] ||
              (state.troops[to] == state.troops[best_to] &&
               state.troops[from] > state.troops[best_from]);
          if (better) {
            best_from = from;
            best_to = to;
          }
        }
      }
      if (best_from >= 0) return Fortify{best_from, best_to, state.troops[best_from] - 1};
      return EndTurn{};
    }
    case Phase::Setup:
      break;
  }
  return EndTurn{};
}

SetupPolicy setup_policy() {
  return SetupPolicy{choose_initial_territory, choose_placement};
}

}  // namespace riskgen::agent
