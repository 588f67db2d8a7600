#include <doctest.h>

#include "riskgen/agent.hpp"
#include "riskgen/match.hpp"
#include "riskgen/seed_maps.hpp"

using namespace riskgen;

namespace {

std::shared_ptr<const Board> board_of(MapGraph m) { return std::make_shared<const Board>(std::move(m)); }

GameState position(std::shared_ptr<const Board> board, const std::vector<int>& owners,
                   const std::vector<int>& troops) {
  GameState s = new_game(std::move(board), {true, 2, true, 3}, 3);
  for (size_t t = 0; t < owners.size(); ++t) {
    s.owner[t] = static_cast<Player>(owners[t]);
    s.troops[t] = troops[t];
  }
  s.reinforcements = reinforcement_count(s, Player::One);
  return s;
}

// Two continents: {0,1} bonus 1 and {2,3,4,5} bonus 3, on a path.
MapGraph two_continent_path() {
  MapGraph m;
  m.name = "path6";
  m.territory_count = 6;
  m.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  m.continents = {Continent{"small", 1, {0, 1}}, Continent{"large", 3, {2, 3, 4, 5}}};
  return m;
}

}  // namespace

TEST_CASE("agent moves are always legal") {
  const auto maps = seed_maps();
  long checked = 0;
  for (std::uint64_t game = 0; checked < 12000; ++game) {
    auto board = board_of(maps[game % maps.size()]);
    const GameParams params{game % 2 == 0, 2 + static_cast<int>(game % 3 == 0), game % 4 < 2,
                            1 + static_cast<int>(game % 4)};
    GameState s = new_game(board, params, game + 1, agent::setup_policy(), 40);
    while (!is_terminal(s)) {
      const Move mv = agent::choose_move(s);
      const auto legal = legal_moves(s);
      REQUIRE_MESSAGE(std::find(legal.begin(), legal.end(), mv) != legal.end(), describe(mv));
      apply_move(s, mv);
      ++checked;
    }
  }
  CHECK(checked >= 10000);
}

TEST_CASE("attacks need a strict advantage") {
  auto board = board_of(two_continent_path());
  GameState s = position(board, {1, 1, 2, 2, 2, 2}, {1, 4, 3, 1, 1, 1});
  s.phase = Phase::Attack;
  // 4 - 1 = 3 is not more than 3.
  CHECK(agent::choose_move(s) == Move{EndAttack{}});
  s.troops[1] = 5;
  CHECK(agent::choose_move(s) == Move{Attack{1, 2, 3}});
  s.troops[1] = 3;
  s.troops[2] = 1;
  CHECK(agent::choose_move(s) == Move{Attack{1, 2, 2}});

  // The largest surplus wins.
  MapGraph star;
  star.name = "star";
  star.territory_count = 4;
  star.edges = {{0, 1}, {0, 2}, {0, 3}};
  star.continents = {Continent{"all", 1, {0, 1, 2, 3}}};
  GameState t = position(board_of(star), {1, 2, 2, 2}, {8, 5, 2, 3});
  t.phase = Phase::Attack;
  CHECK(agent::choose_move(t) == Move{Attack{0, 2, 3}});

  // One conquest per turn.
  t.conquered_this_turn = true;
  CHECK(agent::choose_move(t) == Move{EndAttack{}});
}

TEST_CASE("initial picks prefer the best completable continent ratio") {
  auto board = board_of(two_continent_path());
  GameState s = position(board, std::vector<int>(6, 0), std::vector<int>(6, 0));
  // Ratios: small 1/2, large 3/4.
  CHECK(agent::choose_initial_territory(s, Player::One) == 2);
  // Opponent presence in the large continent makes it uncompletable.
  s.owner[3] = Player::Two;
  CHECK(agent::choose_initial_territory(s, Player::One) == 0);
  // With nothing completable, the highest raw bonus with a free territory.
  s.owner[0] = Player::Two;
  CHECK(agent::choose_initial_territory(s, Player::One) == 2);
  s.owner[2] = Player::Two;
  s.owner[4] = Player::Two;
  s.owner[5] = Player::Two;
  CHECK(agent::choose_initial_territory(s, Player::One) == 1);
}

TEST_CASE("placement targets the weakest border of the target continent") {
  auto board = board_of(two_continent_path());
  GameState s = position(board, {1, 1, 1, 2, 1, 2}, {3, 2, 4, 1, 5, 2});
  CHECK(agent::target_continent(s, Player::One) == 1);
  // Borders in the large continent: 2 (4 troops) and 4 (5 troops).
  CHECK(agent::choose_placement(s, Player::One) == 2);
  CHECK(agent::choose_move(s) == Move{Place{2, s.reinforcements}});

  // Holding the target completely moves the focus elsewhere.
  GameState h = position(board, {2, 2, 1, 1, 1, 1}, {2, 1, 9, 1, 1, 1});
  CHECK(agent::target_continent(h, Player::One) == -1);
  CHECK(agent::choose_placement(h, Player::One) == 2);
}

TEST_CASE("trading") {
  auto board = board_of(two_continent_path());
  GameState s = position(board, {1, 1, 1, 2, 2, 2}, {2, 2, 2, 2, 2, 2});
  // Sets exist but none touches an owned territory: hold the cards.
  s.hands[0] = {{3, CardSymbol::A}, {4, CardSymbol::A}, {5, CardSymbol::A}};
  CHECK(std::holds_alternative<Place>(agent::choose_move(s)));
  // An owned card territory triggers the trade.
  s.hands[0] = {{0, CardSymbol::A}, {4, CardSymbol::B}, {5, CardSymbol::C}};
  CHECK(agent::choose_move(s) == Move{Trade{{0, 4, 5}}});
  // Five cards always trade.
  s.hands[0] = {{0, CardSymbol::A}, {1, CardSymbol::B}, {2, CardSymbol::C}, {3, CardSymbol::A},
                {4, CardSymbol::A}};
  const Move mv = agent::choose_move(s);
  REQUIRE(std::holds_alternative<Trade>(mv));
  CHECK(std::get<Trade>(mv) == trade_options(s.hand(Player::One)).front());
}

TEST_CASE("fortify feeds a border from the interior and never strips a territory") {
  auto board = board_of(two_continent_path());
  GameState s = position(board, {1, 1, 1, 2, 2, 2}, {6, 3, 2, 4, 1, 1});
  s.phase = Phase::Fortify;
  // 1 is interior and feeds the border at 2; 0 only touches interior 1.
  CHECK(agent::choose_move(s) == Move{Fortify{1, 2, 2}});
  s.owner[1] = Player::One;
  s.owner[2] = Player::Two;
  s.troops[1] = 1;
  // Now 1 borders the enemy at 2 and 0 can feed it.
  CHECK(agent::choose_move(s) == Move{Fortify{0, 1, 5}});
  s.troops[0] = 1;
  CHECK(agent::choose_move(s) == Move{EndTurn{}});
}

TEST_CASE("fortify never leaves a territory empty across random states") {
  const auto maps = seed_maps();
  for (std::uint64_t game = 0; game < 60; ++game) {
    auto board = board_of(maps[game % maps.size()]);
    GameState s = new_game(board, {true, 2, true, 3}, game + 11, agent::setup_policy(), 30);
    while (!is_terminal(s)) {
      const Move mv = agent::choose_move(s);
      if (const auto* f = std::get_if<Fortify>(&mv)) {
        REQUIRE(f->count >= 1);
        REQUIRE(s.troops[f->from] - f->count >= 1);
      }
      apply_move(s, mv);
    }
  }
}

TEST_CASE("agent matches terminate on every seed map") {
  const auto maps = seed_maps();
  for (const auto& m : maps) {
    auto board = board_of(m);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const GameParams params{seed % 2 == 0, 2 + static_cast<int>(seed % 3 == 0), seed % 4 < 2,
                              1 + static_cast<int>(seed % 4)};
      const MatchRecord r = play_match(board, params, seed, MatchOptions{48, {}});
      REQUIRE(r.duration() >= 1);
      REQUIRE(r.duration() <= 48);
      if (!r.decisive()) REQUIRE(r.duration() == 48);
    }
  }
}

TEST_CASE("play_match is deterministic in the seed") {
  auto board = board_of(classic_map());
  const auto a = play_match(board, GameParams::classic(), 9);
  const auto b = play_match(board, GameParams::classic(), 9);
  CHECK(a == b);
  bool differs = false;
  for (std::uint64_t s = 10; s < 20 && !differs; ++s) differs = !(play_match(board, GameParams::classic(), s) == a);
  CHECK(differs);
}
