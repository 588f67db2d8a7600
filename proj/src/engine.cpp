#include "riskgen/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace riskgen {

void check_params(const GameParams& params) {
  if (params.defensive_dice != 2 && params.defensive_dice != 3) {
    throw RuleError("defensive_dice must be 2 or 3, got " + std::to_string(params.defensive_dice));
  }
  if (params.bonus_factor < 1 || params.bonus_factor > 4) {
    throw RuleError("bonus_factor must be in 1..4, got " + std::to_string(params.bonus_factor));
  }
}

Board::Board(MapGraph map) : map_(std::move(map)) {
  map_.canonicalize();
  const auto report = validate_map(map_);
  if (!report.valid()) {
    std::string what = "board requires a valid map '" + map_.name + "':";
    for (const auto& m : report.messages) what += " " + m + ";";
    throw MapError(what);
  }
  adjacency_ = map_.adjacency();
  continent_of_ = map_.continent_index();
}

bool Board::adjacent(TerritoryId a, TerritoryId b) const {
  const auto& n = adjacency_[a];
  return std::binary_search(n.begin(), n.end(), b);
}

std::string describe(const Move& move) {
  std::ostringstream out;
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Place>) {
          out << "place " << m.count << " on " << m.territory;
        } else if constexpr (std::is_same_v<M, Trade>) {
          out << "trade cards " << m.cards[0] << "," << m.cards[1] << "," << m.cards[2];
        } else if constexpr (std::is_same_v<M, Attack>) {
          out << "attack " << m.from << " -> " << m.to << " with " << m.dice << " dice";
        } else if constexpr (std::is_same_v<M, EndAttack>) {
          out << "end attack";
        } else if constexpr (std::is_same_v<M, Fortify>) {
          out << "fortify " << m.from << " -> " << m.to << " moving " << m.count;
        } else {
          out << "end turn";
        }
      },
      move);
  return out.str();
}

int GameState::territories_of(Player p) const {
  return static_cast<int>(std::count(owner.begin(), owner.end(), p));
}

int GameState::troops_of(Player p) const {
  int total = 0;
  for (size_t t = 0; t < owner.size(); ++t) {
    if (owner[t] == p) total += troops[t];
  }
  return total;
}

int initial_troops(int territory_count, int owned) {
  const int density = (3 * territory_count + 3) / 4;  // ceil(0.75 T)
  return std::max(owned, density);
}

namespace {

template <typename Pred>
TerritoryId random_territory(GameState& state, Pred pred) {
  std::vector<TerritoryId> options;
  for (TerritoryId t = 0; t < state.territory_count(); ++t) {
    if (pred(t)) options.push_back(t);
  }
  return options[static_cast<size_t>(uniform_int(state.rng, 0, static_cast<int>(options.size()) - 1))];
}

void draw_card(GameState& state, Player p) {
  if (state.deck.empty()) {
    state.deck.swap(state.discard);
    std::shuffle(state.deck.begin(), state.deck.end(), state.rng);
  }
  if (state.deck.empty()) return;
  auto& hand = state.hands[slot(p)];
  hand.push_back(state.deck.back());
  state.deck.pop_back();
  std::sort(hand.begin(), hand.end(),
            [](const Card& a, const Card& b) { return a.territory < b.territory; });
}

void begin_turn(GameState& state) {
  state.phase = Phase::Reinforce;
  state.conquered_this_turn = false;
  state.reinforcements = reinforcement_count(state, state.current);
}

void end_turn(GameState& state) {
  if (state.conquered_this_turn) draw_card(state, state.current);
  ++state.turn_index;
  state.current = opponent(state.current);
  begin_turn(state);
}

void finish_reinforce_if_done(GameState& state) {
  if (state.reinforcements == 0 &&
      static_cast<int>(state.hand(state.current).size()) < kMandatoryTradeHand) {
    state.phase = Phase::Attack;
  }
}

[[noreturn]] void illegal(const Move& move, const std::string& why) {
  throw RuleError("illegal move '" + describe(move) + "': " + why);
}

void check_territory(const GameState& state, const Move& move, TerritoryId t) {
  if (t < 0 || t >= state.territory_count()) {
    illegal(move, "territory " + std::to_string(t) + " does not exist");
  }
}

}  // namespace

GameState new_game(std::shared_ptr<const Board> board, const GameParams& params,
                   std::uint64_t seed, const SetupPolicy& policy, int turn_cap) {
  check_params(params);
  GameState state;
  state.board = std::move(board);
  state.params = params;
  state.turn_cap = turn_cap;
  state.rng.seed(seed);
  const int total = state.territory_count();
  state.owner.assign(static_cast<size_t>(total), Player::None);
  state.troops.assign(static_cast<size_t>(total), 0);
  state.phase = Phase::Setup;

  // Deal: player one takes the first, third, ... territory.
  if (params.random_distribution) {
    std::vector<TerritoryId> order(static_cast<size_t>(total));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), state.rng);
    for (int i = 0; i < total; ++i) {
      state.owner[order[i]] = i % 2 == 0 ? Player::One : Player::Two;
      state.troops[order[i]] = 1;
    }
  } else {
    for (int i = 0; i < total; ++i) {
      const Player p = i % 2 == 0 ? Player::One : Player::Two;
      state.current = p;
      TerritoryId t = policy.pick
                          ? policy.pick(state, p)
                          : random_territory(state, [&](TerritoryId x) {
                              return state.owner[x] == Player::None;
                            });
      if (t < 0 || t >= total || state.owner[t] != Player::None) {
        throw RuleError("setup pick " + std::to_string(t) + " is not an unowned territory");
      }
      state.owner[t] = p;
      state.troops[t] = 1;
    }
  }

  // Remaining initial troops, one at a time, alternating from player one.
  std::array<int, 2> pool{};
  for (Player p : {Player::One, Player::Two}) {
    const int owned = state.territories_of(p);
    pool[slot(p)] = initial_troops(total, owned) - owned;
  }
  Player p = Player::One;
  while (pool[0] + pool[1] > 0) {
    if (pool[slot(p)] > 0) {
      state.current = p;
      TerritoryId t = policy.place
                          ? policy.place(state, p)
                          : random_territory(state, [&](TerritoryId x) { return state.owner[x] == p; });
      if (t < 0 || t >= total || state.owner[t] != p) {
        throw RuleError("setup placement " + std::to_string(t) + " is not owned by the placer");
      }
      ++state.troops[t];
      --pool[slot(p)];
    }
    p = opponent(p);
  }

  state.deck.reserve(static_cast<size_t>(total));
  for (TerritoryId t = 0; t < total; ++t) {
    state.deck.push_back(Card{t, static_cast<CardSymbol>(t % 3)});
  }
  std::shuffle(state.deck.begin(), state.deck.end(), state.rng);

  state.current = Player::One;
  state.turn_index = 0;
  begin_turn(state);
  return state;
}

bool owns_continent(const GameState& state, Player player, int continent) {
  const auto& members = state.board->continents()[static_cast<size_t>(continent)].territories;
  return std::all_of(members.begin(), members.end(),
                     [&](TerritoryId t) { return state.owner[t] == player; });
}

int reinforcement_count(const GameState& state, Player player) {
  const int owned = state.territories_of(player);
  int count = std::max(3, owned / state.params.bonus_factor);
  const int continents = static_cast<int>(state.board->continents().size());
  for (int c = 0; c < continents; ++c) {
    if (owns_continent(state, player, c)) count += state.board->continents()[c].bonus;
  }
  return count;
}

bool is_valid_set(CardSymbol a, CardSymbol b, CardSymbol c) {
  return (a == b && b == c) || (a != b && b != c && a != c);
}

std::vector<Trade> trade_options(const std::vector<Card>& hand) {
  std::vector<Trade> out;
  const size_t n = hand.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      for (size_t k = j + 1; k < n; ++k) {
        if (!is_valid_set(hand[i].symbol, hand[j].symbol, hand[k].symbol)) continue;
        std::array<TerritoryId, 3> cards{hand[i].territory, hand[j].territory, hand[k].territory};
        std::sort(cards.begin(), cards.end());
        out.push_back(Trade{cards});
      }
    }
  }
  return out;
}

int trade_value(int trades_done) {
  static constexpr std::array<int, 6> kSchedule = {4, 6, 8, 10, 12, 15};
  if (trades_done < static_cast<int>(kSchedule.size())) return kSchedule[trades_done];
  return 15 + 5 * (trades_done - static_cast<int>(kSchedule.size()) + 1);
}

std::vector<Move> legal_moves(const GameState& state) {
  std::vector<Move> moves;
  if (is_terminal(state)) return moves;
  const Player me = state.current;
  const Board& board = *state.board;
  const int total = state.territory_count();

  switch (state.phase) {
    case Phase::Setup:
      break;
    case Phase::Reinforce: {
      for (const Trade& t : trade_options(state.hand(me))) moves.emplace_back(t);
      if (static_cast<int>(state.hand(me).size()) >= kMandatoryTradeHand) break;
      for (TerritoryId t = 0; t < total; ++t) {
        if (state.owner[t] != me) continue;
        for (int c = 1; c <= state.reinforcements; ++c) moves.emplace_back(Place{t, c});
      }
      break;
    }
    case Phase::Attack: {
      for (TerritoryId from = 0; from < total; ++from) {
        if (state.owner[from] != me || state.troops[from] < 2) continue;
        const int max_dice = std::min(3, state.troops[from] - 1);
        for (TerritoryId to : board.neighbors(from)) {
          if (state.owner[to] == me) continue;
          for (int d = 1; d <= max_dice; ++d) moves.emplace_back(Attack{from, to, d});
        }
      }
      moves.emplace_back(EndAttack{});
      break;
    }
    case Phase::Fortify: {
      for (TerritoryId from = 0; from < total; ++from) {
        if (state.owner[from] != me || state.troops[from] < 2) continue;
        for (TerritoryId to : board.neighbors(from)) {
          if (state.owner[to] != me) continue;
          for (int c = 1; c <= state.troops[from] - 1; ++c) moves.emplace_back(Fortify{from, to, c});
        }
      }
      moves.emplace_back(EndTurn{});
      break;
    }
  }
  return moves;
}

BattleResult compare_dice(std::vector<int> attacker_rolls, std::vector<int> defender_rolls,
                          int defender_troops) {
  std::sort(attacker_rolls.begin(), attacker_rolls.end(), std::greater<>());
  std::sort(defender_rolls.begin(), defender_rolls.end(), std::greater<>());
  BattleResult result;
  const size_t pairs = std::min(attacker_rolls.size(), defender_rolls.size());
  for (size_t i = 0; i < pairs; ++i) {
    if (attacker_rolls[i] > defender_rolls[i]) {
      ++result.defender_losses;
    } else {
      ++result.attacker_losses;
    }
  }
  result.conquered = result.defender_losses >= defender_troops;
  return result;
}

BattleResult resolve_battle(int attacker_dice, int defender_dice, int attacker_troops,
                            int defender_troops, int max_defensive_dice, Rng& rng) {
  if (attacker_dice < 1 || attacker_dice > std::min(3, attacker_troops - 1)) {
    throw RuleError("attacker dice " + std::to_string(attacker_dice) + " outside 1..min(3, " +
                    std::to_string(attacker_troops) + " - 1)");
  }
  if (defender_dice < 1 || defender_dice > std::min(max_defensive_dice, defender_troops)) {
    throw RuleError("defender dice " + std::to_string(defender_dice) + " outside 1..min(" +
                    std::to_string(max_defensive_dice) + ", " + std::to_string(defender_troops) +
                    ")");
  }
  std::uniform_int_distribution<int> die(1, 6);
  std::vector<int> a(static_cast<size_t>(attacker_dice));
  std::vector<int> d(static_cast<size_t>(defender_dice));
  for (int& x : a) x = die(rng);
  for (int& x : d) x = die(rng);
  return compare_dice(std::move(a), std::move(d), defender_troops);
}

std::optional<BattleResult> apply_move(GameState& state, const Move& move) {
  if (is_terminal(state)) illegal(move, "the match is over");
  const Player me = state.current;
  const Board& board = *state.board;
  std::optional<BattleResult> battle;

  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Place>) {
          if (state.phase != Phase::Reinforce) illegal(move, "not in the reinforce phase");
          check_territory(state, move, m.territory);
          if (static_cast<int>(state.hand(me).size()) >= kMandatoryTradeHand) {
            illegal(move, "a trade is mandatory with five or more cards");
          }
          if (state.owner[m.territory] != me) illegal(move, "territory is not owned by the mover");
          if (m.count < 1 || m.count > state.reinforcements) {
            illegal(move, "count must be in 1.." + std::to_string(state.reinforcements));
          }
          state.troops[m.territory] += m.count;
          state.reinforcements -= m.count;
          finish_reinforce_if_done(state);
        } else if constexpr (std::is_same_v<M, Trade>) {
          if (state.phase != Phase::Reinforce) illegal(move, "not in the reinforce phase");
          auto& hand = state.hands[slot(me)];
          std::array<size_t, 3> at{};
          for (size_t i = 0; i < 3; ++i) {
            check_territory(state, move, m.cards[i]);
            auto it = std::find_if(hand.begin(), hand.end(),
                                   [&](const Card& c) { return c.territory == m.cards[i]; });
            if (it == hand.end()) illegal(move, "card " + std::to_string(m.cards[i]) + " not in hand");
            at[i] = static_cast<size_t>(it - hand.begin());
          }
          if (at[0] == at[1] || at[1] == at[2] || at[0] == at[2]) illegal(move, "repeated card");
          if (!is_valid_set(hand[at[0]].symbol, hand[at[1]].symbol, hand[at[2]].symbol)) {
            illegal(move, "cards do not form a valid set");
          }
          state.reinforcements += trade_value(state.trades_done);
          ++state.trades_done;
          TerritoryId bonus_at = -1;
          for (TerritoryId t : m.cards) {
            if (state.owner[t] == me && (bonus_at < 0 || t < bonus_at)) bonus_at = t;
          }
          if (bonus_at >= 0) state.troops[bonus_at] += kTradeTerritoryBonus;
          std::vector<Card> kept;
          for (size_t i = 0; i < hand.size(); ++i) {
            if (i == at[0] || i == at[1] || i == at[2]) {
              state.discard.push_back(hand[i]);
            } else {
              kept.push_back(hand[i]);
            }
          }
          hand.swap(kept);
          finish_reinforce_if_done(state);
        } else if constexpr (std::is_same_v<M, Attack>) {
          if (state.phase != Phase::Attack) illegal(move, "not in the attack phase");
          check_territory(state, move, m.from);
          check_territory(state, move, m.to);
          if (state.owner[m.from] != me) illegal(move, "attacking territory is not owned");
          if (state.owner[m.to] == me) illegal(move, "target territory is already owned");
          if (!board.adjacent(m.from, m.to)) illegal(move, "territories are not adjacent");
          if (state.troops[m.from] < 2) illegal(move, "attacker needs at least two troops");
          if (m.dice < 1 || m.dice > std::min(3, state.troops[m.from] - 1)) {
            illegal(move, "attacker dice must be in 1..min(3, troops - 1)");
          }
          const int defender_dice = std::min(state.params.defensive_dice, state.troops[m.to]);
          BattleResult r = resolve_battle(m.dice, defender_dice, state.troops[m.from],
                                          state.troops[m.to], state.params.defensive_dice,
                                          state.rng);
          state.troops[m.from] -= r.attacker_losses;
          state.troops[m.to] -= r.defender_losses;
          if (r.conquered) {
            const int available = state.troops[m.from] - 1;
            const int moved = state.params.move_max_on_conquest
                                  ? available
                                  : std::min(available, std::max(1, m.dice - r.attacker_losses));
            state.owner[m.to] = me;
            state.troops[m.to] = moved;
            state.troops[m.from] -= moved;
            state.conquered_this_turn = true;
          }
          battle = r;
        } else if constexpr (std::is_same_v<M, EndAttack>) {
          if (state.phase != Phase::Attack) illegal(move, "not in the attack phase");
          state.phase = Phase::Fortify;
        } else if constexpr (std::is_same_v<M, Fortify>) {
          if (state.phase != Phase::Fortify) illegal(move, "not in the fortify phase");
          check_territory(state, move, m.from);
          check_territory(state, move, m.to);
          if (state.owner[m.from] != me || state.owner[m.to] != me) {
            illegal(move, "both territories must be owned by the mover");
          }
          if (!board.adjacent(m.from, m.to)) illegal(move, "territories are not adjacent");
          if (m.count < 1 || m.count > state.troops[m.from] - 1) {
            illegal(move, "count must leave at least one troop behind");
          }
          state.troops[m.from] -= m.count;
          state.troops[m.to] += m.count;
          end_turn(state);
        } else {
          if (state.phase != Phase::Fortify) illegal(move, "not in the fortify phase");
          end_turn(state);
        }
      },
      move);
  return battle;
}

std::optional<MatchResult> is_terminal(const GameState& state) {
  if (!state.owner.empty()) {
    const Player first = state.owner.front();
    if (first != Player::None &&
        std::all_of(state.owner.begin(), state.owner.end(), [&](Player p) { return p == first; })) {
      return first == Player::One ? MatchResult::Player1Wins : MatchResult::Player2Wins;
    }
  }
  if (state.turn_index >= state.turn_cap) return MatchResult::Draw;
  return std::nullopt;
}

}  // namespace riskgen
