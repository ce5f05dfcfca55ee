#pragma once

#include <memory>

#include "ug/game.hpp"
#include "ug/pog.hpp"
#include "ug/strategy.hpp"

namespace ug {

// Game with probabilistic uncertainty built from a POMDP: locations are the
// POMDP states, inputs its actions, and the single output is "_". The
// uncertainty spreads uniformly over the observation block of the true state.
struct PomdpReduction {
  UncertaintyGame game;
  const Pomdp* source = nullptr;
};

PomdpReduction reduce_pomdp(const Pomdp& m);

// h: inserts the single output after every action. Inverse rejects any other
// output letter with DomainError.
PrefixG prefix_to_game(const PrefixH& rho);
PrefixH prefix_to_pomdp(const PrefixG& rho);

// The only Player-2 strategy of the reduced game (always the single output),
// tabulated up to `depth`.
StrategyG2 trivial_output_strategy(const PomdpReduction& r, int depth);

// alpha_G(rho) = alpha_H(h^-1(rho)) for every G prefix with fewer than
// `depth` steps. alpha_H is keyed by POMDP observation sequences.
StrategyG1 strategy_pomdp_to_g(const PomdpReduction& r, const KeyedPolicy& alpha_h, int depth);

// alpha_H(rho)(a) = sum over observed prefixes rho' of ObsSeq(h(rho))(rho') *
// alpha_G(rho')(a), restricted to prefixes with the observation sequence of
// rho (all others have ObsSeq zero).
Dist pomdp_mixture_at(const PomdpReduction& r, const StrategyG1& alpha_g, const PrefixH& rho);

// Tabulates pomdp_mixture_at per observation sequence, using the first
// history reached for each sequence.
std::shared_ptr<TablePolicy> strategy_g_to_pomdp(const PomdpReduction& r, const StrategyG1& alpha_g, int depth);

}  // namespace ug
