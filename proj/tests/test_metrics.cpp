#include <doctest.h>

#include <cmath>

#include "riskgen/match.hpp"
#include "riskgen/metrics.hpp"
#include "riskgen/seed_maps.hpp"

using namespace riskgen;

namespace {

struct T {
  double h1;
  double h2;
  long moves;
  int leader;
};

MatchRecord record(MatchResult result, const std::vector<T>& turns) {
  MatchRecord r;
  r.result = result;
  for (size_t i = 0; i < turns.size(); ++i) {
    r.turns.push_back(TurnLog{static_cast<int>(i), {turns[i].h1, turns[i].h2}, turns[i].moves,
                              static_cast<Player>(turns[i].leader)});
  }
  return r;
}

// A decisive or drawn record of the given length with flat logs.
MatchRecord of_length(MatchResult result, int turns) {
  return record(result, std::vector<T>(static_cast<size_t>(turns), T{0.5, 0.5, 10, 0}));
}

constexpr auto P1 = MatchResult::Player1Wins;
constexpr auto P2 = MatchResult::Player2Wins;
constexpr auto Draw = MatchResult::Draw;

}  // namespace

TEST_CASE("completion and advantage") {
  const std::vector<MatchRecord> rs = {of_length(P1, 5), of_length(P1, 5), of_length(P2, 5),
                                       of_length(Draw, 48), of_length(P1, 5)};
  CHECK(completion(rs) == doctest::Approx(0.8));
  // Four decisive games, 3 to 1: |3 - 2| / 2.
  CHECK(advantage(rs) == doctest::Approx(0.5));

  const std::vector<MatchRecord> even = {of_length(P1, 5), of_length(P2, 5)};
  CHECK(advantage(even) == 0.0);
  const std::vector<MatchRecord> sweep = {of_length(P2, 5), of_length(P2, 5)};
  CHECK(advantage(sweep) == 1.0);
  const std::vector<MatchRecord> draws = {of_length(Draw, 48), of_length(Draw, 48)};
  CHECK(completion(draws) == 0.0);
  CHECK(advantage(draws) == 0.0);
  CHECK(completion(std::span<const MatchRecord>{}) == 0.0);
}

TEST_CASE("duration") {
  // Relative distance from 24: 0, 0.5, 0.25, clamped 1; draws count 1.
  CHECK(duration(std::vector{of_length(P1, 24)}, 24) == 0.0);
  CHECK(duration(std::vector{of_length(P1, 12)}, 24) == doctest::Approx(0.5));
  CHECK(duration(std::vector{of_length(P2, 30)}, 24) == doctest::Approx(0.25));
  CHECK(duration(std::vector{of_length(P2, 60)}, 24) == 1.0);
  CHECK(duration(std::vector{of_length(Draw, 24)}, 24) == 1.0);
  const std::vector<MatchRecord> mixed = {of_length(P1, 24), of_length(P1, 12), of_length(P2, 60),
                                          of_length(Draw, 24)};
  CHECK(duration(mixed, 24) == doctest::Approx((0 + 0.5 + 1 + 1) / 4.0));
  CHECK(duration(std::vector{of_length(P1, 5)}, 10) == doctest::Approx(0.5));
  CHECK(duration(std::vector{of_length(P1, 1)}, 2) == doctest::Approx(0.5));
}

TEST_CASE("branching factor") {
  // log10(mean + 1) / 2, capped at 1.
  CHECK(branching_factor(std::vector{record(P1, {{0.5, 0.5, 99, 0}})}) == doctest::Approx(1.0));
  CHECK(branching_factor(std::vector{record(P1, {{0.5, 0.5, 5, 0}, {0.5, 0.5, 13, 0}})}) ==
        doctest::Approx(0.5));
  CHECK(branching_factor(std::vector{record(Draw, {{0.5, 0.5, 0, 0}})}) == 0.0);
  CHECK(branching_factor(std::vector{record(P1, {{0.5, 0.5, 100000, 0}})}) == 1.0);
  const std::vector<MatchRecord> two = {record(P1, {{0.5, 0.5, 99, 0}}), record(Draw, {{0.5, 0.5, 9, 0}})};
  CHECK(branching_factor(two) == doctest::Approx(0.75));
}

TEST_CASE("drama, killer moves and lead change on a comeback") {
  // Winner P1 trails by 0.2 and 0.4, then leads by 0.6.
  const MatchRecord comeback = record(P1, {{0.4, 0.6, 1, 2}, {0.3, 0.7, 1, 2}, {0.8, 0.2, 1, 1}});
  const std::vector<MatchRecord> one{comeback};
  CHECK(drama(one) == doctest::Approx((std::sqrt(0.2) + std::sqrt(0.4)) / 2));
  CHECK(killer_moves(one) == doctest::Approx(1.0));
  CHECK(lead_change(one) == doctest::Approx(0.5));

  // Same game but won by P2: margins 0.2, 0.4, -0.6.
  const MatchRecord reversed = record(P2, {{0.4, 0.6, 1, 2}, {0.3, 0.7, 1, 2}, {0.8, 0.2, 1, 1}});
  const std::vector<MatchRecord> two{reversed};
  CHECK(drama(two) == doctest::Approx(std::sqrt(0.6)));
  CHECK(killer_moves(two) == doctest::Approx(0.2));
  CHECK(lead_change(two) == doctest::Approx(0.5));
}

TEST_CASE("criteria edge cases") {
  // Winner always ahead: no drama.
  const MatchRecord steady = record(P1, {{0.6, 0.4, 1, 1}, {0.7, 0.3, 1, 1}, {0.9, 0.1, 1, 1}});
  CHECK(drama(std::vector{steady}) == 0.0);
  CHECK(killer_moves(std::vector{steady}) == doctest::Approx(0.4));
  CHECK(lead_change(std::vector{steady}) == 0.0);

  // Strictly shrinking margin: killer clamps at 0.
  const MatchRecord fading = record(P1, {{0.9, 0.1, 1, 1}, {0.6, 0.4, 1, 1}});
  CHECK(killer_moves(std::vector{fading}) == 0.0);

  // Single-turn games score 0 on killer and lead.
  const MatchRecord quick = record(P2, {{0.0, 1.0, 1, 2}});
  CHECK(killer_moves(std::vector{quick}) == 0.0);
  CHECK(lead_change(std::vector{quick}) == 0.0);

  // A move from no leader to a leader is not a change.
  const MatchRecord from_none = record(P1, {{0.5, 0.5, 1, 0}, {0.6, 0.4, 1, 1}, {0.4, 0.6, 1, 2}});
  CHECK(lead_change(std::vector{from_none}) == doctest::Approx(0.5));

  // Draws are left out of drama, killer and lead; all-draw sets give 0.
  const MatchRecord drawn = record(Draw, {{0.4, 0.6, 1, 2}, {0.6, 0.4, 1, 1}});
  CHECK(lead_change(std::vector{drawn}) == 0.0);
  CHECK(drama(std::vector{drawn}) == 0.0);
  const std::vector<MatchRecord> with_draw = {drawn, steady};
  CHECK(lead_change(with_draw) == 0.0);
  CHECK(killer_moves(with_draw) == doctest::Approx(0.4));

  // Averages across games.
  const std::vector<MatchRecord> pair = {steady, record(P1, {{0.4, 0.6, 1, 2}, {0.6, 0.4, 1, 1}})};
  CHECK(lead_change(pair) == doctest::Approx(0.5));
  CHECK(drama(pair) == doctest::Approx(std::sqrt(0.2) / 2));
}

TEST_CASE("leader and heuristic") {
  CHECK(leader_of({0.6, 0.4}, Player::Two) == Player::One);
  CHECK(leader_of({0.4, 0.6}, Player::One) == Player::Two);
  CHECK(leader_of({0.5, 0.5}, Player::Two) == Player::Two);
  CHECK(leader_of({0.5, 0.5}, Player::None) == Player::None);

  auto board = std::make_shared<const Board>(classic_map());
  GameState s = new_game(board, GameParams::classic(), 1);
  std::fill(s.owner.begin(), s.owner.end(), Player::Two);
  std::fill(s.troops.begin(), s.troops.end(), 1);
  for (int t = 0; t < 14; ++t) s.owner[t] = Player::One;
  s.troops[0] = 43;
  // Territory share 14/42, troop share 56/84.
  CHECK(heuristic(s, Player::One) == doctest::Approx(0.5 * (1.0 / 3) + 0.5 * (2.0 / 3)));
  CHECK(heuristic(s, Player::One, {1.0, 0.0}) == doctest::Approx(1.0 / 3));
  CHECK(heuristic(s, Player::Two, {0.0, 1.0}) == doctest::Approx(1.0 / 3));
}

TEST_CASE("move components count placement, attack and fortify options") {
  MapGraph m;
  m.name = "path";
  m.territory_count = 4;
  m.edges = {{0, 1}, {1, 2}, {2, 3}};
  m.continents = {Continent{"all", 1, {0, 1, 2, 3}}};
  auto board = std::make_shared<const Board>(m);
  GameState s = new_game(board, {true, 2, true, 3}, 1);
  s.owner = {Player::One, Player::One, Player::Two, Player::Two};
  s.troops = {3, 5, 2, 1};
  const MoveComponents c = move_components(s, Player::One, 4);
  CHECK(c.add == 8);
  // Territory 1 attacks 2 with up to 3 dice.
  CHECK(c.attack == 3);
  // 0 -> 1 with 1..2, 1 -> 0 with 1..4.
  CHECK(c.fortify == 6);
  CHECK(c.total() == 17);
}

TEST_CASE("frozen fitness values") {
  // L1 distance to (1, 0, 0, 0.5, 0.5, 0.5, 0.5), worked by hand.
  const CriteriaVector classic{0.063, 0.994, 0.96, 1.0, 0.890, 0.273, 0.009};
  CHECK(fitness(classic) == doctest::Approx(4.499).epsilon(1e-9));
  const CriteriaVector fast{0.98, 0.41, 0.0, 0.76, 0.30, 0.78, 0.25};
  CHECK(fitness(fast) == doctest::Approx(1.42).epsilon(1e-9));
  const CriteriaVector slow{1.0, 0.69, 0.02, 0.50, 0.42, 0.56, 0.42};
  CHECK(fitness(slow) == doctest::Approx(0.93).epsilon(1e-9));
  CHECK(fitness(OptimalTargets{}.values) == 0.0);

  OptimalTargets custom;
  custom.values = classic;
  CHECK(fitness(classic, custom) == 0.0);
  CHECK(fitness(CriteriaVector{}, custom) == doctest::Approx(0.063 + 0.994 + 0.96 + 1 + 0.89 + 0.273 + 0.009));
}

TEST_CASE("criteria stay in [0, 1] on random records") {
  Rng rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<MatchRecord> rs;
    const int games = uniform_int(rng, 1, 6);
    for (int g = 0; g < games; ++g) {
      std::vector<T> turns;
      const int n = uniform_int(rng, 1, 60);
      for (int i = 0; i < n; ++i) {
        const double h1 = unit(rng);
        turns.push_back(T{h1, 1.0 - h1, uniform_int(rng, 0, 5000), uniform_int(rng, 0, 2)});
      }
      rs.push_back(record(static_cast<MatchResult>(uniform_int(rng, 0, 2)), turns));
    }
    const CriteriaVector c = evaluate_criteria(rs, uniform_int(rng, 1, 48));
    for (double v : c.values()) {
      REQUIRE(v >= 0.0);
      REQUIRE(v <= 1.0);
    }
    REQUIRE(fitness(c) >= 0.0);
    REQUIRE(fitness(c) <= 7.0);
  }
}

TEST_CASE("played matches log one entry per turn") {
  auto board = std::make_shared<const Board>(classic_map());
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const MatchRecord r = play_match(board, {true, 2, true, 2}, seed, MatchOptions{30, {}});
    REQUIRE_FALSE(r.turns.empty());
    for (size_t i = 0; i < r.turns.size(); ++i) {
      const TurnLog& t = r.turns[i];
      CHECK(t.turn_index == static_cast<int>(i));
      CHECK(t.heuristic[0] + t.heuristic[1] == doctest::Approx(1.0));
      CHECK(t.move_count > 0);
      CHECK(t.leader == leader_of(t.heuristic, i == 0 ? Player::None : r.turns[i - 1].leader));
    }
    if (r.decisive()) {
      CHECK(r.turns.back().heuristic[r.result == P1 ? 0 : 1] == doctest::Approx(1.0));
    } else {
      CHECK(r.duration() == 30);
    }
  }
}
