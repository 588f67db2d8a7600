#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "riskgen/engine.hpp"
#include "riskgen/seed_maps.hpp"

using namespace riskgen;

namespace {

MapGraph strip(int n, int continents = 1) {
  MapGraph m;
  m.name = "strip";
  m.territory_count = n;
  for (int i = 0; i + 1 < n; ++i) m.edges.emplace_back(i, i + 1);
  const int per = (n + continents - 1) / continents;
  for (int c = 0; c < continents; ++c) {
    Continent k{"c" + std::to_string(c), c + 1, {}};
    for (int t = c * per; t < std::min(n, (c + 1) * per); ++t) k.territories.push_back(t);
    m.continents.push_back(k);
  }
  return m;
}

std::shared_ptr<const Board> board_of(MapGraph m) { return std::make_shared<const Board>(std::move(m)); }

// State at player one's reinforce phase with a custom position.
GameState position(std::shared_ptr<const Board> board, const std::vector<int>& owners,
                   const std::vector<int>& troops, GameParams params = GameParams::classic()) {
  params.random_distribution = true;
  GameState s = new_game(std::move(board), params, 7);
  for (size_t t = 0; t < owners.size(); ++t) {
    s.owner[t] = static_cast<Player>(owners[t]);
    s.troops[t] = troops[t];
  }
  s.reinforcements = reinforcement_count(s, Player::One);
  return s;
}

int total_troops(const GameState& s) { return s.troops_of(Player::One) + s.troops_of(Player::Two); }

std::vector<TerritoryId> all_cards(const GameState& s) {
  std::vector<TerritoryId> ids;
  for (const auto& c : s.deck) ids.push_back(c.territory);
  for (const auto& c : s.discard) ids.push_back(c.territory);
  for (const auto& h : s.hands) {
    for (const auto& c : h) ids.push_back(c.territory);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

TEST_CASE("check_params domain") {
  CHECK_NOTHROW(check_params(GameParams::classic()));
  CHECK_THROWS_AS(check_params({true, 1, false, 3}), RuleError);
  CHECK_THROWS_AS(check_params({true, 4, false, 3}), RuleError);
  CHECK_THROWS_AS(check_params({true, 2, false, 0}), RuleError);
  CHECK_THROWS_AS(check_params({true, 2, false, 5}), RuleError);
}

TEST_CASE("random deal splits territories as evenly as possible") {
  for (int n : {10, 13}) {
    auto board = board_of(strip(n));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const GameState s = new_game(board, {true, 2, false, 3}, seed);
      CHECK(s.territories_of(Player::One) == (n + 1) / 2);
      CHECK(s.territories_of(Player::Two) == n / 2);
      CHECK(std::count(s.owner.begin(), s.owner.end(), Player::None) == 0);
      for (int t : s.troops) CHECK(t >= 1);
    }
  }
  const GameState s13 = new_game(board_of(strip(13)), {true, 2, false, 3}, 3);
  CHECK(s13.territories_of(Player::One) == 7);
  CHECK(s13.territories_of(Player::Two) == 6);
}

TEST_CASE("initial troops") {
  CHECK(initial_troops(42, 21) == 32);
  CHECK(initial_troops(10, 5) == 8);
  CHECK(initial_troops(13, 7) == 10);
  CHECK(initial_troops(2, 1) == 2);
  CHECK(initial_troops(4, 4) == 4);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const GameState s = new_game(board_of(classic_map()), GameParams::classic(), seed);
    CHECK(s.troops_of(Player::One) == 32);
    CHECK(s.troops_of(Player::Two) == 32);
    CHECK(s.phase == Phase::Reinforce);
    CHECK(s.current == Player::One);
    CHECK(s.turn_index == 0);
  }
}

TEST_CASE("alternating picks call the policy in turn") {
  auto board = board_of(strip(5));
  std::vector<std::pair<Player, TerritoryId>> picks;
  SetupPolicy policy;
  policy.pick = [&](const GameState& s, Player p) {
    TerritoryId t = 0;
    while (s.owner[t] != Player::None) ++t;
    picks.emplace_back(p, t);
    return t;
  };
  int places = 0;
  policy.place = [&](const GameState& s, Player p) {
    ++places;
    for (TerritoryId t = 0; t < s.territory_count(); ++t) {
      if (s.owner[t] == p) return t;
    }
    return TerritoryId{-1};
  };
  const GameState s = new_game(board, GameParams::classic(), 1, policy);
  REQUIRE(picks.size() == 5);
  for (size_t i = 0; i < picks.size(); ++i) {
    CHECK(picks[i].first == (i % 2 == 0 ? Player::One : Player::Two));
    CHECK(picks[i].second == static_cast<TerritoryId>(i));
  }
  // ceil(0.75 * 5) = 4 troops each.
  CHECK(places == (4 - 3) + (4 - 2));
  CHECK(s.troops[0] == 2);
  CHECK(s.troops[1] == 3);

  SetupPolicy bad;
  bad.pick = [](const GameState&, Player) { return TerritoryId{0}; };
  CHECK_THROWS_AS(new_game(board, GameParams::classic(), 1, bad), RuleError);
}

TEST_CASE("reinforcement count") {
  auto board = board_of(classic_map());
  GameState s = new_game(board, GameParams::classic(), 1);
  std::fill(s.owner.begin(), s.owner.end(), Player::Two);
  for (int t = 0; t < 11; ++t) s.owner[static_cast<size_t>(t)] = Player::One;
  s.params.bonus_factor = 3;
  const int bonus11 = [&] {
    int b = 0;
    for (size_t c = 0; c < board->continents().size(); ++c) {
      if (owns_continent(s, Player::One, static_cast<int>(c))) b += board->continents()[c].bonus;
    }
    return b;
  }();
  CHECK(reinforcement_count(s, Player::One) == 3 + bonus11);

  // No continent: strip 2 and 4 territories from the first two continents.
  auto plain = board_of(strip(20, 2));
  GameState p = position(plain, std::vector<int>(20, 2), std::vector<int>(20, 1));
  for (int t : {1, 2, 3, 4, 5, 6, 11, 12, 13, 14, 15, 16}) p.owner[t] = Player::One;
  p.params.bonus_factor = 3;
  CHECK(reinforcement_count(p, Player::One) == 4);
  p.params.bonus_factor = 1;
  CHECK(reinforcement_count(p, Player::One) == 12);
  p.params.bonus_factor = 4;
  CHECK(reinforcement_count(p, Player::One) == 3);
  // Owning continent c0 (bonus 1) adds its bonus.
  p.owner[0] = Player::One;
  for (int t = 7; t < 10; ++t) p.owner[t] = Player::One;
  p.params.bonus_factor = 3;
  CHECK(reinforcement_count(p, Player::One) == 16 / 3 + 1);
  CHECK(reinforcement_count(p, Player::Two) == 3);
}

TEST_CASE("legal moves by phase") {
  // 0 - 1 - 2 path with 3 adjacent to 1: player one holds 1 with 4 troops.
  MapGraph m;
  m.name = "star";
  m.territory_count = 4;
  m.edges = {{0, 1}, {1, 2}, {1, 3}};
  m.continents = {Continent{"all", 2, {0, 1, 2, 3}}};
  auto board = board_of(m);
  GameState s = position(board, {2, 1, 2, 1}, {1, 4, 3, 1});
  s.phase = Phase::Attack;
  auto moves = legal_moves(s);
  int attacks = 0;
  for (const auto& mv : moves) {
    if (const auto* a = std::get_if<Attack>(&mv)) {
      CHECK(a->from == 1);
      ++attacks;
    }
  }
  CHECK(attacks == 6);
  CHECK(std::holds_alternative<EndAttack>(moves.back()));
  CHECK(moves.size() == 7);

  s.troops[1] = 2;
  int one_die = 0;
  for (const auto& mv : legal_moves(s)) {
    if (const auto* a = std::get_if<Attack>(&mv)) one_die += a->dice == 1 ? 1 : 0;
  }
  CHECK(one_die == 2);

  // Reinforce: Place per owned territory and count.
  s.phase = Phase::Reinforce;
  s.reinforcements = 3;
  moves = legal_moves(s);
  CHECK(moves.size() == 6);
  CHECK(std::holds_alternative<Place>(moves[0]));

  // Below five cards, trades are optional alongside placements.
  s.hands[0] = {{0, CardSymbol::A}, {1, CardSymbol::B}, {2, CardSymbol::C}, {3, CardSymbol::A}};
  const auto four = legal_moves(s);
  CHECK(std::count_if(four.begin(), four.end(), [](const Move& mv) { return std::holds_alternative<Trade>(mv); }) == 2);
  CHECK(std::count_if(four.begin(), four.end(), [](const Move& mv) { return std::holds_alternative<Place>(mv); }) == 6);

  // Fortify: 1 -> 3 with 1..3 troops, then EndTurn.
  s.hands[0].clear();
  s.troops[1] = 4;
  s.phase = Phase::Fortify;
  moves = legal_moves(s);
  CHECK(moves.size() == 4);
  CHECK(moves[0] == Move{Fortify{1, 3, 1}});
  CHECK(moves[2] == Move{Fortify{1, 3, 3}});
  CHECK(moves[3] == Move{EndTurn{}});
}

TEST_CASE("a hand of five allows only trades") {
  auto board = board_of(strip(6));
  GameState s = position(board, {1, 1, 1, 2, 2, 2}, {2, 2, 2, 2, 2, 2});
  s.hands[0] = {{0, CardSymbol::A}, {1, CardSymbol::B}, {2, CardSymbol::C}, {3, CardSymbol::A},
                {4, CardSymbol::A}};
  const auto moves = legal_moves(s);
  REQUIRE_FALSE(moves.empty());
  for (const auto& mv : moves) CHECK(std::holds_alternative<Trade>(mv));
  // One of each with any of the three A cards, plus {0,3,4}.
  CHECK(moves.size() == 4);
  CHECK_THROWS_AS(apply_move(s, Place{0, 1}), RuleError);
}

TEST_CASE("trades pay the schedule and the territory bonus") {
  const std::vector<int> expected = {4, 6, 8, 10, 12, 15, 20, 25, 30};
  for (size_t i = 0; i < expected.size(); ++i) CHECK(trade_value(static_cast<int>(i)) == expected[i]);

  CHECK(is_valid_set(CardSymbol::A, CardSymbol::A, CardSymbol::A));
  CHECK(is_valid_set(CardSymbol::C, CardSymbol::A, CardSymbol::B));
  CHECK_FALSE(is_valid_set(CardSymbol::A, CardSymbol::A, CardSymbol::B));

  auto board = board_of(strip(6));
  GameState s = position(board, {1, 1, 1, 2, 2, 2}, {1, 1, 1, 1, 1, 1});
  const int base = s.reinforcements;
  s.hands[0] = {{1, CardSymbol::A}, {2, CardSymbol::B}, {5, CardSymbol::C}};
  s.trades_done = 2;
  apply_move(s, Trade{{1, 2, 5}});
  CHECK(s.reinforcements == base + 8);
  CHECK(s.trades_done == 3);
  CHECK(s.troops[1] == 1 + kTradeTerritoryBonus);
  CHECK(s.troops[2] == 1);
  CHECK(s.troops[5] == 1);
  CHECK(s.hand(Player::One).empty());
  CHECK(s.discard.size() == 3);

  // No bonus without an owned card territory.
  s.hands[0] = {{3, CardSymbol::A}, {4, CardSymbol::A}, {5, CardSymbol::A}};
  const int before = total_troops(s);
  apply_move(s, Trade{{3, 4, 5}});
  CHECK(total_troops(s) == before);

  s.hands[0] = {{3, CardSymbol::A}, {4, CardSymbol::A}, {5, CardSymbol::B}};
  CHECK_THROWS_AS(apply_move(s, Trade{{3, 4, 5}}), RuleError);
}

TEST_CASE("dice comparison") {
  CHECK(compare_dice({6, 1, 1}, {5, 4}, 2) == BattleResult{1, 1, false});
  CHECK(compare_dice({6, 5}, {5, 4}, 2) == BattleResult{0, 2, true});
  CHECK(compare_dice({3, 3, 3}, {3, 3}, 5) == BattleResult{2, 0, false});
  CHECK(compare_dice({1, 6}, {6}, 1) == BattleResult{1, 0, false});
  CHECK(compare_dice({2}, {1, 1, 1}, 3) == BattleResult{0, 1, false});
  CHECK(compare_dice({4}, {3}, 1).conquered);

  Rng rng(1);
  CHECK_THROWS_AS(resolve_battle(3, 1, 3, 1, 2, rng), RuleError);
  CHECK_THROWS_AS(resolve_battle(0, 1, 3, 1, 2, rng), RuleError);
  CHECK_THROWS_AS(resolve_battle(1, 3, 2, 5, 2, rng), RuleError);
  CHECK_THROWS_AS(resolve_battle(1, 2, 2, 1, 3, rng), RuleError);
  CHECK_NOTHROW(resolve_battle(1, 3, 2, 5, 3, rng));
}

TEST_CASE("battle frequencies match exact enumeration") {
  CHECK(oracle::defender_pair_probability() == doctest::Approx(21.0 / 36.0));
  Rng rng(2);
  const int trials = 60000;
  for (int ad = 1; ad <= 3; ++ad) {
    for (int dd = 1; dd <= 3; ++dd) {
      const auto exact = oracle::attacker_loss_distribution(ad, dd);
      std::vector<int> counts(exact.size(), 0);
      for (int i = 0; i < trials; ++i) {
        const BattleResult r = resolve_battle(ad, dd, 4, 5, 3, rng);
        REQUIRE(r.attacker_losses + r.defender_losses == std::min(ad, dd));
        ++counts[static_cast<size_t>(r.attacker_losses)];
      }
      for (size_t k = 0; k < exact.size(); ++k) {
        const double observed = counts[k] / static_cast<double>(trials);
        // Five standard errors.
        const double tolerance = 5 * std::sqrt(exact[k] * (1 - exact[k]) / trials) + 1e-9;
        CHECK_MESSAGE(std::abs(observed - exact[k]) <= tolerance,
                      ad << "v" << dd << " losses " << k << ": " << observed << " vs " << exact[k]);
      }
    }
  }
}

TEST_CASE("movement on conquest") {
  auto board = board_of(strip(2));
  // Keep rolling until the single defender falls.
  for (bool max_move : {false, true}) {
    GameParams params = GameParams::classic();
    params.move_max_on_conquest = max_move;
    int conquests = 0;
    for (std::uint64_t seed = 1; conquests < 20 && seed < 500; ++seed) {
      GameState s = position(board, {1, 2}, {6, 1}, params);
      s.rng.seed(seed);
      s.phase = Phase::Attack;
      const auto r = apply_move(s, Attack{0, 1, 3});
      REQUIRE(r.has_value());
      if (!r->conquered) continue;
      ++conquests;
      CHECK(s.owner[1] == Player::One);
      CHECK(s.conquered_this_turn);
      CHECK(s.troops[0] + s.troops[1] == 6);
      if (max_move) {
        CHECK(s.troops[0] == 1);
        CHECK(s.troops[1] == 5);
      } else {
        CHECK(s.troops[1] == 3);
        CHECK(s.troops[0] == 3);
      }
      CHECK(is_terminal(s) == MatchResult::Player1Wins);
    }
    CHECK(conquests == 20);
  }
}

TEST_CASE("a conquering turn draws exactly one card") {
  auto board = board_of(strip(3));
  GameState s = position(board, {1, 2, 2}, {10, 1, 5});
  s.phase = Phase::Attack;
  const size_t deck = s.deck.size();
  bool conquered = false;
  for (int i = 0; i < 50 && !conquered; ++i) {
    if (s.owner[1] == Player::One) break;
    if (s.troops[0] < 4) s.troops[0] = 10;
    conquered = apply_move(s, Attack{0, 1, 3})->conquered;
  }
  REQUIRE(conquered);
  apply_move(s, EndAttack{});
  apply_move(s, EndTurn{});
  CHECK(s.hand(Player::One).size() == 1);
  CHECK(s.deck.size() == deck - 1);
  CHECK(s.current == Player::Two);
  CHECK(s.turn_index == 1);
  CHECK(s.phase == Phase::Reinforce);
  CHECK(s.reinforcements == 3);

  // A quiet turn draws nothing.
  const int p2 = s.reinforcements;
  apply_move(s, Place{2, p2});
  CHECK(s.phase == Phase::Attack);
  apply_move(s, EndAttack{});
  apply_move(s, EndTurn{});
  CHECK(s.hand(Player::Two).empty());
}

TEST_CASE("illegal moves are rejected and leave the state untouched") {
  auto board = board_of(strip(4));
  GameState s = position(board, {1, 1, 2, 2}, {3, 1, 2, 1});
  const GameState copy = s;
  CHECK_THROWS_AS(apply_move(s, Attack{1, 2, 1}), RuleError);  // wrong phase
  CHECK_THROWS_AS(apply_move(s, Place{2, 1}), RuleError);      // not owned
  CHECK_THROWS_AS(apply_move(s, Place{0, 99}), RuleError);
  CHECK_THROWS_AS(apply_move(s, Place{9, 1}), RuleError);
  CHECK_THROWS_AS(apply_move(s, Trade{{0, 1, 2}}), RuleError);
  CHECK(s.troops == copy.troops);
  CHECK(s.reinforcements == copy.reinforcements);
  s.phase = Phase::Attack;
  CHECK_THROWS_AS(apply_move(s, Attack{0, 2, 1}), RuleError);  // not adjacent
  CHECK_THROWS_AS(apply_move(s, Attack{1, 2, 1}), RuleError);  // one troop
  CHECK_THROWS_AS(apply_move(s, Attack{0, 1, 1}), RuleError);  // own target
  s.troops[1] = 3;
  CHECK_THROWS_AS(apply_move(s, Attack{1, 2, 3}), RuleError);  // too many dice
  s.phase = Phase::Fortify;
  CHECK_THROWS_AS(apply_move(s, Fortify{0, 1, 3}), RuleError);
  CHECK_THROWS_AS(apply_move(s, Fortify{1, 2, 1}), RuleError);
  CHECK(s.troops == std::vector<int>{3, 3, 2, 1});
}

TEST_CASE("termination") {
  auto board = board_of(strip(3));
  GameState s = position(board, {1, 1, 1}, {1, 1, 1});
  CHECK(is_terminal(s) == MatchResult::Player1Wins);
  CHECK(legal_moves(s).empty());
  CHECK_THROWS_AS(apply_move(s, Place{0, 1}), RuleError);
  s.owner = {Player::Two, Player::Two, Player::Two};
  CHECK(is_terminal(s) == MatchResult::Player2Wins);
  s.owner[0] = Player::One;
  CHECK_FALSE(is_terminal(s).has_value());
  s.turn_index = s.turn_cap;
  CHECK(is_terminal(s) == MatchResult::Draw);
}

TEST_CASE("random-play fuzz keeps the invariants") {
  const auto maps = seed_maps();
  Rng chooser(99);
  long moves = 0;
  for (std::uint64_t game = 0; moves < 30000; ++game) {
    auto board = board_of(maps[game % maps.size()]);
    const GameParams params{bernoulli(chooser, 0.5), uniform_int(chooser, 2, 3), bernoulli(chooser, 0.5),
                            uniform_int(chooser, 1, 4)};
    GameState s = new_game(board, params, game + 1, {}, 30);
    std::vector<TerritoryId> card_ids(static_cast<size_t>(s.territory_count()));
    std::iota(card_ids.begin(), card_ids.end(), 0);
    while (!is_terminal(s)) {
      const auto legal = legal_moves(s);
      REQUIRE_FALSE(legal.empty());
      const Move mv = legal[static_cast<size_t>(uniform_int(chooser, 0, static_cast<int>(legal.size()) - 1))];
      const int before = total_troops(s);
      const int pool = s.reinforcements;
      const Player mover = s.current;
      const int trades = s.trades_done;
      const auto battle = apply_move(s, mv);
      ++moves;
      for (size_t t = 0; t < s.owner.size(); ++t) {
        REQUIRE(s.owner[t] != Player::None);
        REQUIRE(s.troops[t] >= 1);
      }
      REQUIRE(all_cards(s) == card_ids);
      const int after = total_troops(s);
      if (battle) {
        REQUIRE(before - after == battle->attacker_losses + battle->defender_losses);
      } else if (std::holds_alternative<Place>(mv)) {
        REQUIRE(after - before == std::get<Place>(mv).count);
      } else if (std::holds_alternative<Trade>(mv)) {
        REQUIRE(s.trades_done == trades + 1);
        REQUIRE(s.reinforcements == pool + trade_value(trades));
        REQUIRE((after - before == 0 || after - before == kTradeTerritoryBonus));
      } else {
        REQUIRE(after == before);
      }
      if (s.current != mover) REQUIRE(s.phase == Phase::Reinforce);
      REQUIRE(s.hand(Player::One).size() + s.hand(Player::Two).size() <= static_cast<size_t>(s.territory_count()));
    }
  }
  CHECK(moves >= 10000);
}

TEST_CASE("the engine is deterministic in the seed") {
  auto board = board_of(classic_map());
  auto play = [&](std::uint64_t seed) {
    GameState s = new_game(board, {true, 3, false, 2}, seed, {}, 20);
    Rng chooser(seed);
    std::vector<int> trace;
    while (!is_terminal(s)) {
      const auto legal = legal_moves(s);
      apply_move(s, legal[static_cast<size_t>(uniform_int(chooser, 0, static_cast<int>(legal.size()) - 1))]);
      trace.push_back(s.troops_of(Player::One));
    }
    trace.insert(trace.end(), s.troops.begin(), s.troops.end());
    return trace;
  };
  CHECK(play(5) == play(5));
  CHECK(play(5) != play(6));
}
