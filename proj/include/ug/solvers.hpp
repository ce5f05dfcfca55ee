#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ug/game.hpp"
#include "ug/parity.hpp"
#include "ug/pog.hpp"
#include "ug/reduce_forward.hpp"

namespace ug {

enum class WinMode { Sure, AlmostSure, Positive };
const char* win_mode_name(WinMode m);

// Objective over the states of an alternating game: target membership for
// set objectives, priorities for parity. Player-2 states carry values too.
using StateObjective = Objective;

// Subset construction for Player 1. Player-1 nodes hold sets of Player-1
// states, middle nodes sets of Player-2 states; every set lies in one
// observation block. Only nodes reachable from the initial support exist.
struct KnowledgeGame {
  std::vector<std::vector<int>> sets;
  std::vector<int> level;  // 1 for Player-1 nodes, 2 for middle nodes
  std::vector<int> observation;
  // succ[node][action] lists one successor node per observation.
  std::vector<std::vector<std::vector<int>>> succ;
  std::vector<int> initial;  // one node per initial observation
};

KnowledgeGame knowledge_construction(const PartialObsGame& h);

struct WitnessRow {
  std::vector<int> knowledge;  // Player-1 states
  std::vector<int> memory;     // extra memory (empty when the knowledge suffices)
  std::vector<int> actions;    // played uniformly; one entry for pure choices
};

struct WinningRegion {
  WinMode mode = WinMode::Sure;
  ObjectiveKind objective = ObjectiveKind::Reach;
  bool initial_winning = false;
  // Winning knowledge sets (sure, almost-sure) or winning states (positive).
  std::vector<std::vector<int>> winning;
  std::vector<WitnessRow> witness;
  std::vector<int> action_word;  // positive reachability witness in one-player games
  std::size_t explored = 0;      // nodes of the solved game
};

// Player 1 is partially informed, Player 2 sees the state. Throws
// DomainError when Player 2 has a choice but not a complete partition.
WinningRegion sure_winning(const PartialObsGame& h, const StateObjective& obj);

// Belief-support fixpoints; Player 2 is treated as an adversary that sees
// the state.
WinningRegion almost_sure_reach(const PartialObsGame& h, const std::vector<bool>& target);
WinningRegion almost_sure_buchi(const PartialObsGame& h, const std::vector<bool>& target);
// Equal to sure safety: a violation is a finite prefix with positive mass.
WinningRegion almost_sure_safety(const PartialObsGame& h, const std::vector<bool>& safe);
WinningRegion positive_reach(const PartialObsGame& h, const std::vector<bool>& target);
// Positive safety against a perfectly informed Player 2. See the source for
// the characterisation.
WinningRegion positive_safety(const PartialObsGame& h, const std::vector<bool>& safe);

// Objective of a POMDP lifted to pomdp_as_game (copies inherit from s).
StateObjective lift_pomdp_objective(const Pomdp& m, const Objective& obj);

struct SolveResult {
  bool supported = false;
  std::string classification;  // set when unsupported
  WinningRegion region;
};

// Classification of a cell that has no solver, or nullopt. POMDPs use the
// all-powerful row.
std::optional<std::string> unsupported_classification(ObjectiveKind k, WinMode mode, bool all_powerful);

SolveResult solve_uncertainty_game(const UncertaintyGame& g, const Objective& obj, WinMode mode,
                                   ReductionMode player2);
SolveResult solve_pomdp(const Pomdp& m, const Objective& obj, WinMode mode);

}  // namespace ug

namespace ug::detail {
// Sure winning through the Safra-based tracker for every prefix-independent
// objective (Buchi included); used to cross-check the breakpoint tracker.
WinningRegion sure_winning_safra(const PartialObsGame& h, const StateObjective& obj);
}  // namespace ug::detail
