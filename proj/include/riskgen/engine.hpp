#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "riskgen/map_graph.hpp"
#include "riskgen/rng.hpp"

namespace riskgen {

inline constexpr int kDefaultTurnCap = 48;
inline constexpr int kMandatoryTradeHand = 5;

enum class Player : std::uint8_t { None = 0, One = 1, Two = 2 };

constexpr Player opponent(Player p) {
  return p == Player::One ? Player::Two : (p == Player::Two ? Player::One : Player::None);
}

/// 0 for player one, 1 for player two.
constexpr size_t slot(Player p) { return static_cast<size_t>(p) - 1; }

/// The four evolvable rule attributes.
struct GameParams {
  bool random_distribution = true;    // false: players alternately pick territories
  int defensive_dice = 2;             // 2 or 3
  bool move_max_on_conquest = false;  // true: all but one troop may advance
  int bonus_factor = 3;               // 1..4

  bool operator==(const GameParams&) const = default;

  /// Free territory choice, two defence dice, maximum advance, factor 3.
  static GameParams classic() { return {false, 2, true, 3}; }
};

/// Raised for rule violations: illegal moves, bad battle inputs, invalid sets.
class RuleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws RuleError if any attribute is outside its domain.
void check_params(const GameParams& params);

/// A validated map with adjacency and continent lookups precomputed. Shared
/// read-only between every match played on the same map.
class Board {
 public:
  /// Throws MapError if the map does not pass validate_map.
  explicit Board(MapGraph map);

  const MapGraph& map() const { return map_; }
  int territory_count() const { return map_.territory_count; }
  const std::vector<TerritoryId>& neighbors(TerritoryId t) const { return adjacency_[t]; }
  bool adjacent(TerritoryId a, TerritoryId b) const;
  int continent_of(TerritoryId t) const { return continent_of_[t]; }
  const std::vector<Continent>& continents() const { return map_.continents; }

 private:
  MapGraph map_;
  std::vector<std::vector<TerritoryId>> adjacency_;
  std::vector<int> continent_of_;
};

enum class CardSymbol : std::uint8_t { A = 0, B = 1, C = 2 };

struct Card {
  TerritoryId territory = 0;
  CardSymbol symbol = CardSymbol::A;

  bool operator==(const Card&) const = default;
};

enum class Phase : std::uint8_t { Setup, Reinforce, Attack, Fortify };

struct Place {
  TerritoryId territory;
  int count;
  bool operator==(const Place&) const = default;
};
/// Card territories in ascending order.
struct Trade {
  std::array<TerritoryId, 3> cards;
  bool operator==(const Trade&) const = default;
};
struct Attack {
  TerritoryId from;
  TerritoryId to;
  int dice;
  bool operator==(const Attack&) const = default;
};
struct EndAttack {
  bool operator==(const EndAttack&) const = default;
};
struct Fortify {
  TerritoryId from;
  TerritoryId to;
  int count;
  bool operator==(const Fortify&) const = default;
};
struct EndTurn {
  bool operator==(const EndTurn&) const = default;
};

using Move = std::variant<Place, Trade, Attack, EndAttack, Fortify, EndTurn>;

std::string describe(const Move& move);

struct BattleResult {
  int attacker_losses = 0;
  int defender_losses = 0;
  bool conquered = false;

  bool operator==(const BattleResult&) const = default;
};

enum class MatchResult : std::uint8_t { Player1Wins, Player2Wins, Draw };

struct GameState {
  std::shared_ptr<const Board> board;
  GameParams params;
  std::vector<Player> owner;
  std::vector<int> troops;
  std::array<std::vector<Card>, 2> hands;
  std::vector<Card> deck;  // drawn from the back
  std::vector<Card> discard;
  Phase phase = Phase::Setup;
  Player current = Player::One;
  int turn_index = 0;
  int reinforcements = 0;  // troops left to place this turn
  bool conquered_this_turn = false;
  int trades_done = 0;
  int turn_cap = kDefaultTurnCap;
  Rng rng;

  const std::vector<Card>& hand(Player p) const { return hands[slot(p)]; }
  int territories_of(Player p) const;
  int troops_of(Player p) const;
  int territory_count() const { return board->territory_count(); }
};

/// Chooses a territory during setup. Pick callbacks receive only unowned
/// territories as options; place callbacks must return an owned territory.
using SetupChooser = std::function<TerritoryId(const GameState&, Player)>;

struct SetupPolicy {
  SetupChooser pick;   // alternating-pick deal; random when empty
  SetupChooser place;  // extra initial troops; random when empty
};

/// Initial troops per player including the one placed on each owned territory.
int initial_troops(int territory_count, int owned);

/// Deals territories, places initial troops and starts player one's turn.
GameState new_game(std::shared_ptr<const Board> board, const GameParams& params,
                   std::uint64_t seed, const SetupPolicy& policy = {},
                   int turn_cap = kDefaultTurnCap);

/// Territory term max(3, owned / factor) plus bonuses of fully held continents.
int reinforcement_count(const GameState& state, Player player);

bool owns_continent(const GameState& state, Player player, int continent);

/// Three identical symbols or one of each.
bool is_valid_set(CardSymbol a, CardSymbol b, CardSymbol c);

/// Every valid three-card set in the hand, as ascending territory triples.
std::vector<Trade> trade_options(const std::vector<Card>& hand);

/// Troops awarded for the trade with the given zero-based global index:
/// 4, 6, 8, 10, 12, 15, then +5 per trade.
int trade_value(int trades_done);
inline int trade_value(const GameState& state) { return trade_value(state.trades_done); }
inline constexpr int kTradeTerritoryBonus = 2;

std::vector<Move> legal_moves(const GameState& state);

/// Compares the highest dice pairwise; ties go to the defender. Rolls need not
/// be sorted.
BattleResult compare_dice(std::vector<int> attacker_rolls, std::vector<int> defender_rolls,
                          int defender_troops);

/// Rolls and compares. Throws RuleError if the dice counts break the limits.
BattleResult resolve_battle(int attacker_dice, int defender_dice, int attacker_troops,
                            int defender_troops, int max_defensive_dice, Rng& rng);

/// Applies a legal move. Throws RuleError naming the broken rule otherwise and
/// leaves the state untouched in that case. Returns the battle for attacks.
std::optional<BattleResult> apply_move(GameState& state, const Move& move);

/// Winner when one player holds every territory, Draw at the turn cap.
std::optional<MatchResult> is_terminal(const GameState& state);

}  // namespace riskgen
