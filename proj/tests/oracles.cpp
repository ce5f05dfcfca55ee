#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "ug/safra.hpp"

namespace oracle {

using namespace ug;

Rational joint_cone_prob(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta,
                         const PrefixG& rho) {
  if (rho.loc(0) != g.initial) return 0;
  const int n = rho.steps(), L = g.num_locations();
  std::vector<int> seen(n + 1, 0);
  Rational total = 0;
  for (;;) {
    Rational w = 1;
    for (int j = 0; j <= n && w != 0; ++j) w *= g.un[rho.loc(j)](seen[j]);
    if (w != 0) {
      PrefixG truth(rho.loc(0)), observed(seen[0]);
      for (int j = 0; j < n && w != 0; ++j) {
        const int i = rho.in(j), o = rho.out(j);
        w *= alpha.at(observed)(i);
        if (w == 0) break;
        w *= beta.variant == Player2Variant::AllPowerful ? beta.at(truth, observed, i)(o) : beta.at(truth, i)(o);
        if (w == 0) break;
        w *= g.delta[g.delta_index(rho.loc(j), i, o)](rho.loc(j + 1));
        truth = truth.extended(i, o, rho.loc(j + 1));
        observed = observed.extended(i, o, seen[j + 1]);
      }
      total += w;
    }
    int k = n;
    while (k >= 0 && ++seen[k] == L) seen[k--] = 0;
    if (k < 0) break;
  }
  return total;
}

Rational obs_seq_product(const UncertaintyGame& g, const PrefixG& truth, const PrefixG& observed) {
  if (truth.seq.size() != observed.seq.size()) return 0;
  Rational w = 1;
  for (std::size_t k = 0; k < truth.seq.size(); ++k) {
    if (k % 3 == 0) {
      w *= g.un[truth.seq[k]](observed.seq[k]);
    } else if (truth.seq[k] != observed.seq[k]) {
      return 0;
    }
  }
  return w;
}

Rational classical_cone_prob(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta,
                             const PrefixG& rho) {
  if (rho.loc(0) != g.initial) return 0;
  Rational w = 1;
  PrefixG truth(rho.loc(0));
  for (int j = 0; j < rho.steps() && w != 0; ++j) {
    const int i = rho.in(j), o = rho.out(j);
    w *= alpha.at(truth)(i);
    if (w != 0) w *= beta.variant == Player2Variant::AllPowerful ? beta.at(truth, truth, i)(o) : beta.at(truth, i)(o);
    if (w != 0) w *= g.delta[g.delta_index(rho.loc(j), i, o)](rho.loc(j + 1));
    truth = truth.extended(i, o, rho.loc(j + 1));
  }
  return w;
}

namespace {

std::vector<bool> reach_from(const std::vector<std::vector<int>>& succ, const std::vector<bool>& alive,
                             const std::vector<int>& sources) {
  std::vector<bool> seen(succ.size(), false);
  std::deque<int> q;
  for (int s : sources) {
    if (alive[s] && !seen[s]) {
      seen[s] = true;
      q.push_back(s);
    }
  }
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int w : succ[v]) {
      if (alive[w] && !seen[w]) {
        seen[w] = true;
        q.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool odd_cycle_reachable(const std::vector<std::vector<int>>& succ, const std::vector<int>& priority,
                         const std::vector<bool>& alive, int from) {
  const auto reach = reach_from(succ, alive, {from});
  for (std::size_t u = 0; u < succ.size(); ++u) {
    if (!reach[u] || priority[u] % 2 == 0) continue;
    std::vector<bool> high(succ.size());
    for (std::size_t w = 0; w < succ.size(); ++w) high[w] = alive[w] && priority[w] >= priority[u];
    if (reach_from(succ, high, succ[u])[u]) return true;
  }
  return false;
}

namespace {

std::vector<std::vector<int>> restrict(const ParityGame& g, const std::vector<int>& choice, int player) {
  std::vector<std::vector<int>> succ = g.succ;
  for (int v = 0; v < g.size(); ++v) {
    if (g.owner[v] == player) succ[v] = {choice[v]};
  }
  return succ;
}

}  // namespace

bool strategy_wins(const ParityGame& g, const std::vector<int>& choice, int player, int v) {
  const auto succ = restrict(g, choice, player);
  std::vector<int> prio = g.priority;
  if (player == 1) {
    for (int& p : prio) ++p;
  }
  return !odd_cycle_reachable(succ, prio, std::vector<bool>(g.size(), true), v);
}

std::vector<int> brute_parity_winner(const ParityGame& g) {
  std::vector<int> mine;
  for (int v = 0; v < g.size(); ++v) {
    if (g.owner[v] == 0) mine.push_back(v);
  }
  std::vector<int> winner(g.size(), 1);
  std::vector<std::size_t> pick(mine.size(), 0);
  for (;;) {
    std::vector<int> choice(g.size(), -1);
    for (std::size_t k = 0; k < mine.size(); ++k) choice[mine[k]] = g.succ[mine[k]][pick[k]];
    for (int v = 0; v < g.size(); ++v) {
      if (winner[v] == 1 && strategy_wins(g, choice, 0, v)) winner[v] = 0;
    }
    std::size_t k = 0;
    while (k < mine.size() && ++pick[k] == g.succ[mine[k]].size()) pick[k++] = 0;
    if (k == mine.size()) break;
  }
  return winner;
}

bool bad_path_exists(const std::vector<int>& priority, const std::vector<int>& initial,
                     const std::vector<Relation>& stem, const std::vector<Relation>& cycle) {
  const int n = static_cast<int>(priority.size());
  const int S = static_cast<int>(stem.size()), C = static_cast<int>(cycle.size());
  const int positions = S + C;
  std::vector<std::vector<int>> succ(positions * n);
  std::vector<int> prio(positions * n);
  for (int pos = 0; pos < positions; ++pos) {
    const Relation& rel = pos < S ? stem[pos] : cycle[pos - S];
    const int next = pos + 1 < positions ? pos + 1 : S;
    for (int s = 0; s < n; ++s) prio[pos * n + s] = priority[s];
    for (const auto& [a, b] : rel) succ[pos * n + a].push_back(next * n + b);
  }
  std::vector<bool> alive(positions * n, true);
  for (int s : initial) {
    if (odd_cycle_reachable(succ, prio, alive, s)) return true;
  }
  return false;
}

bool dpa_accepts(const std::vector<int>& priority, const std::vector<int>& initial, const std::vector<Relation>& stem,
                 const std::vector<Relation>& cycle) {
  BadPathDpa dpa(priority);
  auto tree = dpa.initial(initial);
  for (const auto& rel : stem) dpa.step(tree, rel);
  std::map<std::vector<int>, int> seen;
  std::vector<int> round_min;
  for (;;) {
    auto code = tree.encode();
    auto it = seen.find(code);
    if (it != seen.end()) {
      const int lo = *std::min_element(round_min.begin() + it->second, round_min.end());
      return lo % 2 == 0;
    }
    seen[code] = static_cast<int>(round_min.size());
    int lo = dpa.max_priority() + 1;
    for (const auto& rel : cycle) lo = std::min(lo, dpa.step(tree, rel));
    round_min.push_back(lo);
  }
}

// ---------------------------------------------------------------- POMDP chains

namespace {

std::vector<int> knowledge_update(const Pomdp& m, const std::vector<int>& k, int a, int seen_state,
                                  const std::vector<bool>& target, bool reach) {
  std::set<int> out;
  for (int s : k) {
    for (const auto& [t, p] : m.delta[s][a]) {
      if (m.obs[t] == m.obs[seen_state] && !(reach && target[t])) out.insert(t);
    }
  }
  return {out.begin(), out.end()};
}

// Tarjan's SCCs; returns the component id per node.
std::vector<int> scc(const std::vector<std::vector<int>>& succ, int& count) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on(n, false);
  int next = 0;
  count = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on[v] = true;
    for (int w : succ[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      for (;;) {
        const int w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp[w] = count;
        if (w == v) break;
      }
      ++count;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  return comp;
}

}  // namespace

ChainCheck check_witness_chain(const Pomdp& m, const std::vector<bool>& target, const std::vector<WitnessRow>& witness,
                               bool reach) {
  ChainCheck res;
  std::map<std::vector<int>, std::vector<int>> allowed;
  for (const auto& row : witness) allowed[row.knowledge] = row.actions;
  if (reach && target[m.initial]) return res;

  std::map<std::pair<int, std::vector<int>>, int> ids;
  std::vector<std::pair<int, std::vector<int>>> nodes;
  std::vector<std::vector<int>> succ;
  const int absorbed = 0;  // node 0: the target has been reached
  nodes.push_back({-1, {}});
  succ.push_back({0});
  auto id = [&](int s, const std::vector<int>& k) {
    auto [it, fresh] = ids.emplace(std::make_pair(s, k), static_cast<int>(nodes.size()));
    if (fresh) {
      nodes.push_back({s, k});
      succ.emplace_back();
    }
    return it->second;
  };
  std::deque<int> queue{id(m.initial, {m.initial})};
  std::set<int> done;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (!done.insert(v).second) continue;
    const auto [s, k] = nodes[v];
    auto it = allowed.find(k);
    if (it == allowed.end() || it->second.empty()) {
      res.complete = false;
      res.almost_sure = false;
      return res;
    }
    std::set<int> out;
    for (int a : it->second) {
      for (const auto& [t, p] : m.delta[s][a]) {
        if (reach && target[t]) {
          out.insert(absorbed);
          done.insert(absorbed);
        } else {
          const int w = id(t, knowledge_update(m, k, a, t, target, reach));
          out.insert(w);
          queue.push_back(w);
        }
      }
    }
    succ[v].assign(out.begin(), out.end());
  }
  int count = 0;
  const auto comp = scc(succ, count);
  std::vector<bool> leaves(count, false), good(count, false), used(count, false);
  for (std::size_t v = 0; v < succ.size(); ++v) {
    if (done.count(static_cast<int>(v)) == 0) continue;
    used[comp[v]] = true;
    for (int w : succ[v]) leaves[comp[v]] = leaves[comp[v]] || comp[w] != comp[v];
    const bool is_absorbed = v == static_cast<std::size_t>(absorbed);
    if (is_absorbed ? reach : (!reach && target[nodes[v].first])) good[comp[v]] = true;
  }
  for (int c = 0; c < count; ++c) {
    if (!used[c] || leaves[c]) continue;
    ++res.bsccs;
    res.almost_sure = res.almost_sure && good[c];
  }
  return res;
}

bool exists_almost_sure_strategy(const Pomdp& m, const std::vector<bool>& target, bool reach) {
  const int n = m.num_states(), k = m.num_actions();
  if (reach && target[m.initial]) return true;
  std::vector<std::vector<int>> sets;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> set;
    for (int s = 0; s < n; ++s) {
      if (mask >> s & 1) set.push_back(s);
    }
    sets.push_back(set);
  }
  const int options = (1 << k) - 1;
  std::vector<int> pick(sets.size(), 1);
  for (;;) {
    std::vector<WitnessRow> w;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      WitnessRow row{sets[j], {}, {}};
      for (int a = 0; a < k; ++a) {
        if (pick[j] >> a & 1) row.actions.push_back(a);
      }
      w.push_back(row);
    }
    if (check_witness_chain(m, target, w, reach).almost_sure) return true;
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] > options) pick[j++] = 1;
    if (j == pick.size()) return false;
  }
}

bool support_reachable(const Pomdp& m, const std::vector<bool>& target) {
  std::vector<bool> seen(m.num_states(), false);
  std::deque<int> q{m.initial};
  seen[m.initial] = true;
  while (!q.empty()) {
    const int s = q.front();
    q.pop_front();
    if (target[s]) return true;
    for (const auto& row : m.delta[s]) {
      for (const auto& [t, p] : row) {
        if (!seen[t]) {
          seen[t] = true;
          q.push_back(t);
        }
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------- perfect information

bool perfect_info_sure(const PartialObsGame& h, const StateObjective& obj) {
  const int n = h.num_states();
  ParityGame pg;
  std::vector<int> prio(n);
  const bool reach = obj.kind == ObjectiveKind::Reach, safe = obj.kind == ObjectiveKind::Safe;
  if (reach || safe) {
    for (int s = 0; s < n; ++s) prio[s] = obj.target[s] ? 0 : 1;
  } else {
    prio = compile_priorities(obj);
  }
  for (int s = 0; s < n; ++s) pg.add_node(h.owner[s] == 1 ? 0 : 1, prio[s]);
  for (int s = 0; s < n; ++s) {
    const bool absorbing = (reach && obj.target[s]) || (safe && !obj.target[s]);
    if (absorbing) {
      pg.succ[s] = {s};
      continue;
    }
    for (const auto& d : h.delta[s]) {
      const int c = pg.add_node(1, prio[s]);
      for (const auto& [t, p] : d) pg.succ[c].push_back(t);
      pg.succ[s].push_back(c);
    }
  }
  const auto sol = zielonka_solve(pg);
  for (const auto& [s, p] : h.initial) {
    if (sol.winner[s] != 0) return false;
  }
  return true;
}

bool perfect_info_positive_safety(const PartialObsGame& h, const std::vector<bool>& safe) {
  const int n = h.num_states();
  auto all_in = [&](const Dist& d, const std::vector<bool>& set) {
    for (const auto& [t, p] : d) {
      if (!set[t]) return false;
    }
    return true;
  };
  auto any_in = [&](const Dist& d, const std::vector<bool>& set) {
    for (const auto& [t, p] : d) {
      if (set[t]) return true;
    }
    return false;
  };
  std::vector<bool> w = safe;
  for (bool changed = true; changed;) {
    changed = false;
    for (int s = 0; s < n; ++s) {
      if (!w[s]) continue;
      bool keep = h.owner[s] != 1;
      for (const auto& d : h.delta[s]) keep = h.owner[s] == 1 ? (keep || all_in(d, w)) : (keep && all_in(d, w));
      if (!keep) w[s] = false, changed = true;
    }
  }
  std::vector<bool> a = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (int s = 0; s < n; ++s) {
      if (a[s] || !safe[s]) continue;
      bool in = h.owner[s] != 1;
      for (const auto& d : h.delta[s]) in = h.owner[s] == 1 ? (in || any_in(d, a)) : (in && any_in(d, a));
      if (in) a[s] = true, changed = true;
    }
  }
  for (const auto& [s, p] : h.initial) {
    if (a[s]) return true;
  }
  return false;
}

bool mdp_almost_sure_buchi(const Pomdp& m, const std::vector<bool>& target) {
  const int n = m.num_states(), k = m.num_actions();
  std::vector<bool> w(n, true);
  for (;;) {
    std::vector<std::vector<int>> allowed(n);
    for (bool shrink = true; shrink;) {
      shrink = false;
      for (int s = 0; s < n; ++s) {
        if (!w[s]) continue;
        allowed[s].clear();
        for (int a = 0; a < k; ++a) {
          bool ok = true;
          for (const auto& [t, p] : m.delta[s][a]) ok = ok && w[t];
          if (ok) allowed[s].push_back(a);
        }
        if (allowed[s].empty()) w[s] = false, shrink = true;
      }
    }
    // States of W that reach a target in W along allowed actions.
    std::vector<bool> good(n, false);
    for (int s = 0; s < n; ++s) good[s] = w[s] && target[s];
    for (bool grow = true; grow;) {
      grow = false;
      for (int s = 0; s < n; ++s) {
        if (good[s] || !w[s]) continue;
        for (int a : allowed[s]) {
          for (const auto& [t, p] : m.delta[s][a]) {
            if (good[t] && !good[s]) good[s] = grow = true;
          }
        }
      }
    }
    if (good == w) return w[m.initial];
    w = good;
  }
}

}  // namespace oracle
