#include "ug/reduce_forward.hpp"

#include <functional>
#include <map>

#include "ug/errors.hpp"

namespace ug {

int ReducedGame::first(int s) const {
  const int n = num_locations;
  return is_player1_state(s) ? s / n : ((s - n * n) / num_inputs) / n;
}

int ReducedGame::second(int s) const {
  const int n = num_locations;
  return is_player1_state(s) ? s % n : ((s - n * n) / num_inputs) % n;
}

int ReducedGame::letter(int s) const {
  const int n = num_locations;
  return is_player1_state(s) ? -1 : (s - n * n) % num_inputs;
}

ReducedGame reduce_game(const UncertaintyGame& g, const std::optional<Objective>& objective, ReductionMode mode) {
  ReducedGame r;
  r.mode = mode;
  const int n = g.num_locations(), k = g.num_inputs();
  r.num_locations = n;
  r.num_inputs = k;
  PartialObsGame& h = r.pog;
  h.actions1 = g.inputs;
  h.actions2 = g.outputs;
  const int total = n * n * (1 + k);
  h.states.resize(total);
  h.owner.resize(total);
  h.delta.resize(total);
  for (int l1 = 0; l1 < n; ++l1) {
    for (int l2 = 0; l2 < n; ++l2) {
      const int s = r.s1(l1, l2);
      h.states[s] = "(" + g.locations[l1] + "," + g.locations[l2] + ")";
      h.owner[s] = 1;
      for (int i = 0; i < k; ++i) {
        const int m = r.s2(l1, l2, i);
        h.states[m] = "(" + g.locations[l1] + "," + g.locations[l2] + "," + g.inputs[i] + ")";
        h.owner[m] = 2;
        h.delta[s].push_back(Dist::dirac(m));
        for (int o = 0; o < g.num_outputs(); ++o) {
          std::map<int, Rational> row;
          for (const auto& [t1, p] : g.Delta(l1, i, o)) {
            for (const auto& [t2, q] : g.Un(t1)) row[r.s1(t1, t2)] += p * q;
          }
          h.delta[m].push_back(Dist(row));
        }
      }
    }
  }
  // Player 1 sees the second component, Player 2 the first one (standard)
  // or everything (all-powerful). Player-1 and Player-2 states never share a
  // block.
  h.obs1_blocks.assign(2 * n, {});
  for (int s = 0; s < total; ++s) h.obs1_blocks[(r.is_player1_state(s) ? 0 : n) + r.second(s)].push_back(s);
  if (mode == ReductionMode::AllPowerful) {
    for (int s = 0; s < total; ++s) h.obs2_blocks.push_back({s});
  } else {
    h.obs2_blocks.assign(2 * n, {});
    for (int s = 0; s < total; ++s) h.obs2_blocks[(r.is_player1_state(s) ? 0 : n) + r.first(s)].push_back(s);
  }
  std::map<int, Rational> init;
  for (const auto& [l, p] : g.Un(g.initial)) init[r.s1(g.initial, l)] += p;
  h.initial = Dist(init);
  h.index_observations();

  if (objective) {
    const std::vector<int> pg = compile_priorities(*objective);
    r.priority.resize(total);
    for (int s = 0; s < total; ++s) r.priority[s] = pg.at(r.first(s));
    if (objective->kind != ObjectiveKind::Parity) {
      r.target.resize(total);
      for (int s = 0; s < total; ++s) r.target[s] = objective->target.at(r.first(s));
    }
  }
  return r;
}

PrefixG project_prefix(const ReducedGame& r, const PrefixH& rho, Component which) {
  if (rho.seq.empty() || rho.steps() % 2 != 0 || !r.is_player1_state(rho.last())) {
    throw DomainError("H prefix does not end in a Player-1 state");
  }
  auto comp = [&](int s) { return which == Component::First ? r.first(s) : r.second(s); };
  PrefixG p(comp(rho.state(0)));
  for (int j = 0; j < rho.steps(); j += 2) {
    if (!r.is_player1_state(rho.state(j)) || r.is_player1_state(rho.state(j + 1))) {
      throw DomainError("H prefix does not alternate between the players");
    }
    p = p.extended(rho.action(j), rho.action(j + 1), comp(rho.state(j + 2)));
  }
  return p;
}

PrefixH pair_prefix(const ReducedGame& r, const PrefixG& first, const PrefixG& second) {
  if (!action_matching(first, second)) throw DomainError("prefixes are not action-matching");
  PrefixH h({r.s1(first.loc(0), second.loc(0))});
  for (int j = 0; j < first.steps(); ++j) {
    const int i = first.in(j);
    h = h.extended(i, r.s2(first.loc(j), second.loc(j), i));
    h = h.extended(first.out(j), r.s1(first.loc(j + 1), second.loc(j + 1)));
  }
  return h;
}

std::vector<int> destutter(const ReducedGame& r, const PrefixH& rho) {
  std::vector<int> out;
  for (std::size_t k = 0; k < rho.seq.size(); ++k) {
    if (k % 2 == 0 && !r.is_player1_state(rho.seq[k])) continue;
    out.push_back(rho.seq[k]);
  }
  return out;
}

// ---------------------------------------------------------------- G to H

namespace {

class AlphaFromG : public HStrategy {
 public:
  AlphaFromG(const ReducedGame& r, const StrategyG1& a) : r_(r), a_(a) {}
  Dist at(const PrefixH& rho) const override { return a_.at(project_prefix(r_, rho, Component::Second)); }

 private:
  const ReducedGame& r_;
  const StrategyG1& a_;
};

class BetaFromG : public HStrategy {
 public:
  BetaFromG(const ReducedGame& r, const StrategyG2& b) : r_(r), b_(b) {}
  Dist at(const PrefixH& rho) const override {
    if (rho.steps() == 0 || r_.is_player1_state(rho.last())) throw DomainError("Player-2 strategy queried off turn");
    const int i = rho.action(rho.steps() - 1);
    const PrefixH base(std::vector<int>(rho.seq.begin(), rho.seq.end() - 2));
    const PrefixG g1 = project_prefix(r_, base, Component::First);
    if (b_.variant == Player2Variant::Ordinary) return b_.at(g1, i);
    return b_.at(g1, project_prefix(r_, base, Component::Second), i);
  }

 private:
  const ReducedGame& r_;
  const StrategyG2& b_;
};

}  // namespace

StrategiesH map_strategies_g_to_h(const ReducedGame& r, const StrategyG1& alpha, const StrategyG2& beta) {
  StrategiesH out;
  out.alpha = std::make_unique<AlphaFromG>(r, alpha);
  out.beta = std::make_unique<BetaFromG>(r, beta);
  return out;
}

// ---------------------------------------------------------------- H to G

NotObservationBased::NotObservationBased(int player_, ObservationWitness w)
    : std::runtime_error("Player-" + std::to_string(player_) + " strategy is not observation-based"),
      player(player_),
      witness(std::move(w)) {}

namespace {

// Calls fn on every G prefix with exactly `steps` steps (all locations).
void for_each_g_prefix(int n, int k, int m, int steps, const std::function<void(const PrefixG&)>& fn) {
  std::function<void(const PrefixG&, int)> rec = [&](const PrefixG& p, int left) {
    if (left == 0) {
      fn(p);
      return;
    }
    for (int i = 0; i < k; ++i) {
      for (int o = 0; o < m; ++o) {
        for (int l = 0; l < n; ++l) rec(p.extended(i, o, l), left - 1);
      }
    }
  };
  for (int l = 0; l < n; ++l) rec(PrefixG(l), steps);
}

template <class Key>
void record(std::unordered_map<std::vector<int>, std::pair<PrefixH, Dist>, IntSeqHash>& seen, const Key& key,
            const PrefixH& rho, Dist d, int player) {
  auto [it, fresh] = seen.emplace(key, std::make_pair(rho, d));
  if (!fresh && !(it->second.second == d)) throw NotObservationBased(player, ObservationWitness{it->second.first, rho});
}

}  // namespace

StrategiesG map_strategies_h_to_g(const ReducedGame& r, const HStrategy& alpha, const HStrategy& beta,
                                  Player2Variant variant, int depth) {
  const PartialObsGame& h = r.pog;
  using Seen = std::unordered_map<std::vector<int>, std::pair<PrefixH, Dist>, IntSeqHash>;
  Seen seen_a, seen_b;
  StrategiesG out;
  out.alpha.depth = depth;
  out.beta.depth = depth;
  out.beta.variant = variant;

  // Every support-reachable H history below the depth bound is a
  // representative; all representatives of one G key must agree.
  std::function<void(const PrefixH&, int)> dfs = [&](const PrefixH& rho, int g_steps) {
    const int s = rho.last();
    if (r.is_player1_state(s)) {
      if (g_steps >= depth) return;
      const PrefixG g2 = project_prefix(r, rho, Component::Second);
      Dist d = alpha.at(rho);
      record(seen_a, g2.seq, rho, d, 1);
      out.alpha.set(g2, d);
      for (int i = 0; i < r.num_inputs; ++i) dfs(rho.extended(i, h.delta[s][i].begin()->first), g_steps);
      return;
    }
    const int i = r.letter(s);
    const PrefixH base(std::vector<int>(rho.seq.begin(), rho.seq.end() - 2));
    const PrefixG g1 = project_prefix(r, base, Component::First);
    Dist d = beta.at(rho);
    if (variant == Player2Variant::Ordinary) {
      record(seen_b, StrategyG2::key(g1, i), rho, d, 2);
      out.beta.set(g1, i, d);
    } else {
      const PrefixG g2 = project_prefix(r, base, Component::Second);
      record(seen_b, StrategyG2::key(g1, g2, i), rho, d, 2);
      out.beta.set(g1, g2, i, d);
    }
    for (int o = 0; o < static_cast<int>(h.actions2.size()); ++o) {
      for (const auto& [t, p] : h.delta[s][o]) dfs(rho.extended(o, t), g_steps + 1);
    }
  };
  for (const auto& [s0, w] : h.initial) dfs(PrefixH({s0}), 0);

  // Histories H never reaches still get an entry through the diagonal
  // representative when the H strategy answers there.
  const int n = r.num_locations, k = r.num_inputs, m = static_cast<int>(h.actions2.size());
  for (int steps = 0; steps < depth; ++steps) {
    for_each_g_prefix(n, k, m, steps, [&](const PrefixG& p) {
      if (!out.alpha.table.count(p)) {
        try {
          out.alpha.set(p, alpha.at(pair_prefix(r, p, p)));
        } catch (const DomainError&) {
        }
      }
      for (int i = 0; i < k; ++i) {
        if (variant == Player2Variant::Ordinary && out.beta.table.count(StrategyG2::key(p, i))) continue;
        if (variant == Player2Variant::AllPowerful && out.beta.table.count(StrategyG2::key(p, p, i))) continue;
        try {
          const PrefixH rho = pair_prefix(r, p, p);
          const Dist d = beta.at(rho.extended(i, r.s2(p.last(), p.last(), i)));
          if (variant == Player2Variant::Ordinary) {
            out.beta.set(p, i, d);
          } else {
            out.beta.set(p, p, i, d);
          }
        } catch (const DomainError&) {
        }
      }
    });
  }
  return out;
}

}  // namespace ug
