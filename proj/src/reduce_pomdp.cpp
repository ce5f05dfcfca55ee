#include "ug/reduce_pomdp.hpp"

#include <functional>
#include <map>

#include "ug/errors.hpp"
#include "ug/measure.hpp"

namespace ug {

PomdpReduction reduce_pomdp(const Pomdp& m) {
  PomdpReduction r;
  r.source = &m;
  UncertaintyGame& g = r.game;
  g.locations = m.states;
  g.inputs = m.actions;
  g.outputs = {"_"};
  g.unresolved = m.unresolved;
  g.initial = m.initial;
  g.objective = m.objective;
  g.resize_tables();
  for (int s = 0; s < m.num_states(); ++s) {
    for (int a = 0; a < m.num_actions(); ++a) g.delta[g.delta_index(s, a, 0)] = m.delta[s][a];
    g.un[s] = Dist::uniform(m.blocks.at(m.obs.at(s)));
  }
  return r;
}

PrefixG prefix_to_game(const PrefixH& rho) {
  PrefixG p(rho.state(0));
  for (int j = 0; j < rho.steps(); ++j) p = p.extended(rho.action(j), 0, rho.state(j + 1));
  return p;
}

PrefixH prefix_to_pomdp(const PrefixG& rho) {
  PrefixH p({rho.loc(0)});
  for (int j = 0; j < rho.steps(); ++j) {
    if (rho.out(j) != 0) throw DomainError("prefix carries an output other than the single output letter");
    p = p.extended(rho.in(j), rho.loc(j + 1));
  }
  return p;
}

StrategyG2 trivial_output_strategy(const PomdpReduction& r, int depth) {
  const UncertaintyGame& g = r.game;
  StrategyG2 b;
  b.depth = depth;
  // Only truth prefixes that follow transition supports from the initial
  // location are ever consulted by the measure.
  std::function<void(const PrefixG&)> rec = [&](const PrefixG& p) {
    if (p.steps() >= depth) return;
    for (int i = 0; i < g.num_inputs(); ++i) {
      b.set(p, i, Dist::dirac(0));
      for (const auto& [l, w] : g.Delta(p.last(), i, 0)) rec(p.extended(i, 0, l));
    }
  };
  rec(PrefixG(g.initial));
  return b;
}

StrategyG1 strategy_pomdp_to_g(const PomdpReduction& r, const KeyedPolicy& alpha_h, int depth) {
  const UncertaintyGame& g = r.game;
  StrategyG1 a;
  a.depth = depth;
  std::function<void(const PrefixG&)> rec = [&](const PrefixG& p) {
    if (p.steps() >= depth) return;
    try {
      a.set(p, alpha_h.at(observation_seq(*r.source, prefix_to_pomdp(p))));
    } catch (const DomainError&) {
      // The policy never sees this observation sequence.
    }
    for (int i = 0; i < g.num_inputs(); ++i) {
      for (int l = 0; l < g.num_locations(); ++l) rec(p.extended(i, 0, l));
    }
  };
  for (int l = 0; l < g.num_locations(); ++l) rec(PrefixG(l));
  return a;
}

Dist pomdp_mixture_at(const PomdpReduction& r, const StrategyG1& alpha_g, const PrefixH& rho) {
  std::map<int, Rational> mix;
  for (const auto& [obs, w] : observation_support(r.game, prefix_to_game(rho))) {
    for (const auto& [a, p] : alpha_g.at(obs)) mix[a] += w * p;
  }
  return Dist(mix);
}

std::shared_ptr<TablePolicy> strategy_g_to_pomdp(const PomdpReduction& r, const StrategyG1& alpha_g, int depth) {
  const Pomdp& m = *r.source;
  auto policy = std::make_shared<TablePolicy>();
  std::function<void(const PrefixH&)> rec = [&](const PrefixH& rho) {
    if (rho.steps() >= depth) return;
    auto key = observation_seq(m, rho);
    if (!policy->contains(key)) policy->set(key, pomdp_mixture_at(r, alpha_g, rho));
    for (int a = 0; a < m.num_actions(); ++a) {
      for (const auto& [t, w] : m.delta[rho.last()][a]) rec(rho.extended(a, t));
    }
  };
  rec(PrefixH({m.initial}));
  return policy;
}

}  // namespace ug
