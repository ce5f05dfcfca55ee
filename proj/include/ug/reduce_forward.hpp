#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ug/game.hpp"
#include "ug/pog.hpp"
#include "ug/strategy.hpp"

namespace ug {

enum class ReductionMode { AllPowerful, Standard };

// Partial-observation game H built from G. Player-1 states are pairs
// (true location, observed location); Player-2 states additionally carry the
// pending input letter. State ids:
//   (l1, l2)    -> l1 * |L| + l2
//   (l1, l2, i) -> |L|^2 + (l1 * |L| + l2) * |I| + i
struct ReducedGame {
  PartialObsGame pog;
  ReductionMode mode = ReductionMode::AllPowerful;
  // Priority per H state, lifted from the first component. Empty when no
  // priority-carrying objective was given.
  std::vector<int> priority;
  // Target membership per H state for set objectives, lifted the same way.
  std::vector<bool> target;
  int num_locations = 0;
  int num_inputs = 0;

  int s1(int l1, int l2) const { return l1 * num_locations + l2; }
  int s2(int l1, int l2, int i) const {
    return num_locations * num_locations + (l1 * num_locations + l2) * num_inputs + i;
  }
  bool is_player1_state(int s) const { return s < num_locations * num_locations; }
  int first(int s) const;
  int second(int s) const;
  int letter(int s) const;  // pending input of a Player-2 state
};

ReducedGame reduce_game(const UncertaintyGame& g, const std::optional<Objective>& objective, ReductionMode mode);

enum class Component { First, Second };

// g1 / g2: componentwise projection of an H history that ends in a
// Player-1 state. Intermediate Player-2 states are skipped.
PrefixG project_prefix(const ReducedGame& r, const PrefixH& rho, Component which);

// h12: zips two action-matching G prefixes into the H history whose
// components they are, inserting the intermediate Player-2 states.
PrefixH pair_prefix(const ReducedGame& r, const PrefixG& first, const PrefixG& second);

// (l1,l2) i o (l1',l2') ...: drops the intermediate Player-2 states.
std::vector<int> destutter(const ReducedGame& r, const PrefixH& rho);

struct StrategiesH {
  std::unique_ptr<HStrategy> alpha;
  std::unique_ptr<HStrategy> beta;
};

// alpha_H(rho) = alpha_G(g2(rho)); beta_H(rho i) = beta_G(g1(rho) i) or, for an
// all-powerful beta_G, beta_G(g1(rho), g2(rho), i). The returned strategies
// read the G tables lazily and keep references to them.
StrategiesH map_strategies_g_to_h(const ReducedGame& r, const StrategyG1& alpha, const StrategyG2& beta);

struct StrategiesG {
  StrategyG1 alpha;
  StrategyG2 beta;
};

// Thrown when an H strategy handed to the H-to-G mapping is not
// observation-based for its player.
struct NotObservationBased : std::runtime_error {
  NotObservationBased(int player_, ObservationWitness w);
  int player;
  ObservationWitness witness;
};

// alpha_G(rho2) = alpha_H(any H history with second component rho2);
// beta_G(rho1 i) = beta_H(any H history with first component rho1, i);
// all-powerful: beta_G(rho1, rho2, i) = beta_H(h12(rho1, rho2) i).
// Observation-consistency of the inputs is checked on every history up to
// `depth` steps first; a violation raises NotObservationBased. The output
// tables cover all G prefixes with fewer than `depth` steps.
StrategiesG map_strategies_h_to_g(const ReducedGame& r, const HStrategy& alpha, const HStrategy& beta,
                                  Player2Variant variant, int depth);

}  // namespace ug
