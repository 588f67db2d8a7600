#pragma once

#include "riskgen/engine.hpp"

namespace riskgen {

/// The handcrafted playtest player. Stateless: every decision is a pure
/// function of the state, with ties broken by lowest continent or territory id.
namespace agent {

/// Alternating-pick setup: a free territory in the most valuable continent the
/// player can still complete (bonus per territory), otherwise in the free
/// continent with the highest raw bonus.
TerritoryId choose_initial_territory(const GameState& state, Player player);

/// The weakest enemy-bordering territory inside the target continent. Setup
/// troops go there one at a time; the reinforce phase places the whole pool.
TerritoryId choose_placement(const GameState& state, Player player);

/// Continent the player is building towards: best bonus per territory among
/// continents it has a foothold in but does not fully hold. -1 if none.
int target_continent(const GameState& state, Player player);

/// Next move for the player to act. Always an element of legal_moves(state).
/// Attacks stop after the first conquest of a turn.
Move choose_move(const GameState& state);

SetupPolicy setup_policy();

}  // namespace agent
}  // namespace riskgen
