#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ug/game.hpp"
#include "ug/pog.hpp"
#include "ug/rational.hpp"
#include "ug/strategy.hpp"
#include "ug/verify.hpp"

namespace fx {

using ug::Dist;
using ug::Rational;

inline Rational Q(const std::string& s) { return ug::parse_rational(s); }

inline Dist D(std::initializer_list<std::pair<int, const char*>> entries) {
  std::map<int, Rational> w;
  for (const auto& [x, p] : entries) w[x] += Q(p);
  return Dist(w);
}

inline ug::UncertaintyGame blank_game(int n, std::vector<std::string> in, std::vector<std::string> out) {
  ug::UncertaintyGame g;
  for (int l = 0; l < n; ++l) g.locations.push_back("l" + std::to_string(l));
  g.inputs = std::move(in);
  g.outputs = std::move(out);
  g.resize_tables();
  return g;
}

// Fills every missing Delta row with a self-loop and every missing un row
// with the identity.
inline void complete(ug::UncertaintyGame& g) {
  for (int l = 0; l < g.num_locations(); ++l) {
    for (int i = 0; i < g.num_inputs(); ++i) {
      for (int o = 0; o < g.num_outputs(); ++o) {
        auto& d = g.delta[g.delta_index(l, i, o)];
        if (d.empty()) d = Dist::dirac(l);
      }
    }
    if (g.un[l].empty()) g.un[l] = Dist::dirac(l);
  }
}

// Every prefix with exactly `steps` steps starting anywhere.
inline void for_each_prefix(const ug::UncertaintyGame& g, int steps, const std::function<void(const ug::PrefixG&)>& fn) {
  std::function<void(const ug::PrefixG&, int)> rec = [&](const ug::PrefixG& p, int left) {
    if (left == 0) {
      fn(p);
      return;
    }
    for (int i = 0; i < g.num_inputs(); ++i) {
      for (int o = 0; o < g.num_outputs(); ++o) {
        for (int l = 0; l < g.num_locations(); ++l) rec(p.extended(i, o, l), left - 1);
      }
    }
  };
  for (int l = 0; l < g.num_locations(); ++l) rec(ug::PrefixG(l), steps);
}

// Player-1 table from a rule over observed prefixes.
inline ug::StrategyG1 table_g1(const ug::UncertaintyGame& g, int depth,
                               const std::function<Dist(const ug::PrefixG&)>& rule) {
  ug::StrategyG1 s;
  s.depth = depth;
  for (int n = 0; n < depth; ++n) for_each_prefix(g, n, [&](const ug::PrefixG& p) { s.set(p, rule(p)); });
  return s;
}

inline ug::StrategyG2 table_g2(const ug::UncertaintyGame& g, int depth,
                               const std::function<Dist(const ug::PrefixG&, int)>& rule) {
  ug::StrategyG2 s;
  s.depth = depth;
  for (int n = 0; n < depth; ++n) {
    for_each_prefix(g, n, [&](const ug::PrefixG& p) {
      for (int i = 0; i < g.num_inputs(); ++i) s.set(p, i, rule(p, i));
    });
  }
  return s;
}

inline ug::StrategyG1 constant_g1(const ug::UncertaintyGame& g, int depth, int action) {
  return table_g1(g, depth, [&](const ug::PrefixG&) { return Dist::dirac(action); });
}

inline ug::StrategyG2 constant_g2(const ug::UncertaintyGame& g, int depth, int action) {
  return table_g2(g, depth, [&](const ug::PrefixG&, int) { return Dist::dirac(action); });
}

// Two locations x, y; the start x is observed as x or y with probability
// 1/2 each, y is observed exactly. Inputs a, b; output c. Every transition
// returns to x.
inline ug::UncertaintyGame blurred_pair() {
  ug::UncertaintyGame g = blank_game(2, {"a", "b"}, {"c"});
  g.locations = {"x", "y"};
  for (int l = 0; l < 2; ++l) {
    for (int i = 0; i < 2; ++i) g.delta[g.delta_index(l, i, 0)] = Dist::dirac(0);
  }
  g.un[0] = D({{0, "1/2"}, {1, "1/2"}});
  g.un[1] = Dist::dirac(1);
  return g;
}

// Chain l0 -> l1: every step from l0 succeeds with probability 1/3; l1 absorbs.
inline ug::UncertaintyGame chain() {
  ug::UncertaintyGame g = blank_game(2, {"a"}, {"c"});
  g.delta[g.delta_index(0, 0, 0)] = D({{0, "2/3"}, {1, "1/3"}});
  g.delta[g.delta_index(1, 0, 0)] = Dist::dirac(1);
  g.un[0] = Dist::dirac(0);
  g.un[1] = Dist::dirac(1);
  return g;
}

// Row with one or two successors, so supports stay sparse and the solvers
// see both outcomes.
inline Dist sparse_row(std::mt19937_64& rng, const std::vector<int>& pool) {
  const int a = pool[rng() % pool.size()], b = pool[rng() % pool.size()];
  if (a == b || rng() % 3 == 0) return Dist::dirac(a);
  return D({{a, "1/2"}, {b, "1/2"}});
}

inline ug::Pomdp sparse_pomdp(std::mt19937_64& rng, int n, int k, bool singleton_blocks = false) {
  ug::Pomdp m;
  std::vector<int> all;
  for (int s = 0; s < n; ++s) {
    m.states.push_back("s" + std::to_string(s));
    all.push_back(s);
  }
  for (int a = 0; a < k; ++a) m.actions.push_back(std::string(1, static_cast<char>('a' + a)));
  m.delta.assign(n, {});
  for (int s = 0; s < n; ++s) {
    for (int a = 0; a < k; ++a) m.delta[s].push_back(sparse_row(rng, all));
  }
  for (int s = 0; s < n; ++s) {
    const int b = singleton_blocks ? static_cast<int>(m.blocks.size()) : static_cast<int>(rng() % (m.blocks.size() + 1));
    if (b == static_cast<int>(m.blocks.size())) m.blocks.emplace_back();
    m.blocks[b].push_back(s);
  }
  m.initial = 0;
  m.index_observations();
  return m;
}

inline std::vector<bool> random_set(std::mt19937_64& rng, int n) {
  std::vector<bool> t(n);
  for (int s = 0; s < n; ++s) t[s] = rng() % 3 == 0;
  return t;
}

// Two locations with blurred observations both ways and priorities 0 / 1.
// Both players react to the current location only (observed for Player 1,
// true for Player 2), so every correspondence check holds unmutated.
inline ug::GameInstance mutation_instance() {
  ug::GameInstance inst;
  ug::UncertaintyGame& g = inst.game;
  g = blank_game(2, {"a", "b"}, {"c", "d"});
  g.locations = {"x", "y"};
  g.delta[g.delta_index(0, 0, 0)] = D({{0, "1/2"}, {1, "1/2"}});
  g.delta[g.delta_index(0, 0, 1)] = Dist::dirac(1);
  g.delta[g.delta_index(0, 1, 0)] = Dist::dirac(0);
  g.delta[g.delta_index(0, 1, 1)] = D({{0, "2/3"}, {1, "1/3"}});
  for (int i = 0; i < 2; ++i) {
    for (int o = 0; o < 2; ++o) g.delta[g.delta_index(1, i, o)] = D({{0, "1/3"}, {1, "2/3"}});
  }
  g.un[0] = D({{0, "1/2"}, {1, "1/2"}});
  g.un[1] = D({{0, "1/4"}, {1, "3/4"}});
  g.objective = ug::Objective{ug::ObjectiveKind::Parity, {}, {0, 1}};
  const int depth = 3;
  inst.alpha = table_g1(g, depth, [](const ug::PrefixG& p) {
    return p.last() == 0 ? Dist::dirac(0) : D({{0, "1/2"}, {1, "1/2"}});
  });
  inst.beta = table_g2(g, depth, [](const ug::PrefixG& p, int i) {
    return p.last() == 1 || i == 1 ? D({{0, "1/2"}, {1, "1/2"}}) : Dist::dirac(0);
  });
  inst.variant = ug::Player2Variant::Ordinary;
  inst.seed = 17;
  inst.shape = ug::StrategyShape::CurrentObservation;
  inst.description = "canned two-location instance";
  return inst;
}

}  // namespace fx
