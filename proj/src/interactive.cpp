#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "riskgen/agent.hpp"
#include "riskgen/harness.hpp"

namespace riskgen {

namespace {

struct Aborted {};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Reads a choice in [1, count]; re-prompts on anything else.
size_t read_choice(std::istream& in, std::ostream& out, size_t count) {
  std::string line;
  while (true) {
    out << "choice [1-" << count << "]> " << std::flush;
    if (!std::getline(in, line)) throw Aborted{};
    line = trim(line);
    if (line == "quit") throw Aborted{};
    try {
      size_t used = 0;
      const long n = std::stol(line, &used);
      if (used == line.size() && n >= 1 && static_cast<size_t>(n) <= count) {
        return static_cast<size_t>(n - 1);
      }
    } catch (const std::exception&) {
    }
    out << "invalid choice\n";
  }
}

char owner_tag(Player p) {
  switch (p) {
    case Player::One:
      return '1';
    case Player::Two:
      return '2';
    case Player::None:
      break;
  }
  return '-';
}

void show_board(const GameState& state, std::ostream& out) {
  const auto& continents = state.board->continents();
  for (const auto& c : continents) {
    out << c.name << " (+" << c.bonus << "):";
    for (TerritoryId t : c.territories) {
      out << ' ' << t << '(' << state.troops[t] << ")P" << owner_tag(state.owner[t]);
    }
    out << '\n';
  }
}

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Setup:
      return "setup";
    case Phase::Reinforce:
      return "reinforce";
    case Phase::Attack:
      return "attack";
    case Phase::Fortify:
      return "fortify";
  }
  return "?";
}

// Setup menu over the territories accepted by `eligible`.
template <typename Eligible>
TerritoryId ask_territory(const GameState& state, std::istream& in, std::ostream& out,
                          const char* prompt, Eligible eligible) {
  std::vector<TerritoryId> options;
  for (TerritoryId t = 0; t < state.territory_count(); ++t) {
    if (eligible(t)) options.push_back(t);
  }
  show_board(state, out);
  out << prompt << '\n';
  for (size_t i = 0; i < options.size(); ++i) out << "  " << i + 1 << ") territory " << options[i] << '\n';
  return options[read_choice(in, out, options.size())];
}

}  // namespace

std::optional<MatchResult> run_interactive(const GameDefinition& game, std::uint64_t seed,
                                           Player human, std::istream& in, std::ostream& out,
                                           int turn_cap) {
  auto board = std::make_shared<const Board>(game.map);
  const SetupPolicy agent_setup = agent::setup_policy();
  SetupPolicy policy;
  policy.pick = [&](const GameState& s, Player p) {
    if (p != human) return agent_setup.pick(s, p);
    return ask_territory(s, in, out, "pick a territory:",
                         [&](TerritoryId t) { return s.owner[t] == Player::None; });
  };
  policy.place = [&](const GameState& s, Player p) {
    if (p != human) return agent_setup.place(s, p);
    return ask_territory(s, in, out, "place one initial troop:",
                         [&](TerritoryId t) { return s.owner[t] == p; });
  };

  try {
    GameState state = new_game(board, game.params, seed, policy, turn_cap);
    std::optional<MatchResult> result;
    while (!(result = is_terminal(state))) {
      if (state.current == human) {
        const auto moves = legal_moves(state);
        out << "\nturn " << state.turn_index + 1 << ", " << phase_name(state.phase);
        if (state.phase == Phase::Reinforce) out << ", " << state.reinforcements << " troops to place";
        out << ", cards " << state.hand(human).size() << '\n';
        show_board(state, out);
        for (size_t i = 0; i < moves.size(); ++i) out << "  " << i + 1 << ") " << describe(moves[i]) << '\n';
        apply_move(state, moves[read_choice(in, out, moves.size())]);
      } else {
        const Move move = agent::choose_move(state);
        out << "agent: " << describe(move) << '\n';
        apply_move(state, move);
      }
    }
    show_board(state, out);
    out << "result: " << result_text(*result) << '\n';
    return result;
  } catch (const Aborted&) {
    out << "\naborted\n";
    return std::nullopt;
  }
}

}  // namespace riskgen
