#include "ug/pog.hpp"

#include <algorithm>
#include <set>

#include "ug/errors.hpp"

namespace ug {

namespace {

int find_name(const std::vector<std::string>& names, const std::string& n) {
  auto it = std::find(names.begin(), names.end(), n);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

std::vector<int> index_blocks(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<int> obs(n, -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    for (int s : blocks[b]) {
      if (s >= 0 && s < n && obs[s] < 0) obs[s] = b;
    }
  }
  return obs;
}

void check_partition(const std::vector<std::vector<int>>& blocks, int n, const std::string& what,
                     ValidationReport& r) {
  std::vector<int> seen(n, 0);
  for (const auto& b : blocks) {
    if (b.empty()) r.push_back(what + ": empty block");
    for (int s : b) {
      if (s < 0 || s >= n) {
        r.push_back(what + ": block names an unknown state");
      } else {
        ++seen[s];
      }
    }
  }
  for (int s = 0; s < n; ++s) {
    if (seen[s] != 1) {
      r.push_back(what + " is not a partition (state #" + std::to_string(s) + " covered " + std::to_string(seen[s]) +
                  " times)");
    }
  }
}

void check_dist(const Dist& d, int n, const std::string& where, ValidationReport& r) {
  if (d.empty()) {
    r.push_back("missing row " + where);
    return;
  }
  for (const auto& [x, w] : d) {
    if (x < 0 || x >= n) r.push_back("dangling state in " + where);
    if (w < 0 || w > 1) r.push_back("probability outside [0,1] in " + where);
  }
  if (d.total() != 1) r.push_back("distribution sum " + to_string(d.total()) + " != 1 in " + where);
}

void check_duplicates(const std::vector<std::string>& names, const char* what, ValidationReport& r) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) r.push_back(std::string("duplicate ") + what + " name '" + n + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------- games

int PartialObsGame::state_id(const std::string& name) const { return find_name(states, name); }

void PartialObsGame::index_observations() {
  obs1 = index_blocks(obs1_blocks, num_states());
  obs2 = index_blocks(obs2_blocks, num_states());
}

bool PartialObsGame::complete_observation(int player) const {
  const auto& bl = blocks(player);
  if (static_cast<int>(bl.size()) != num_states()) return false;
  return std::all_of(bl.begin(), bl.end(), [](const auto& b) { return b.size() == 1; });
}

ValidationReport validate_pog(const PartialObsGame& h) {
  ValidationReport r;
  const int n = h.num_states();
  if (n == 0) r.push_back("no states");
  check_duplicates(h.states, "state", r);
  check_duplicates(h.actions1, "Player-1 action", r);
  check_duplicates(h.actions2, "Player-2 action", r);
  for (const auto& u : h.unresolved) r.push_back("dangling state '" + u + "'");
  if (static_cast<int>(h.owner.size()) != n || static_cast<int>(h.delta.size()) != n) {
    r.push_back("owner or transition table has wrong size");
    return r;
  }
  bool has1 = false, has2 = false;
  for (int s = 0; s < n; ++s) {
    if (h.owner[s] != 1 && h.owner[s] != 2) {
      r.push_back("state '" + h.states[s] + "' has owner other than 1 or 2");
      continue;
    }
    (h.owner[s] == 1 ? has1 : has2) = true;
  }
  if (has1 && h.actions1.empty()) r.push_back("empty Player-1 action set");
  if (has2 && h.actions2.empty()) r.push_back("empty Player-2 action set");
  for (int s = 0; s < n; ++s) {
    if (h.owner[s] != 1 && h.owner[s] != 2) continue;
    const auto& acts = h.actions_of(h.owner[s]);
    if (h.delta[s].size() != acts.size()) {
      r.push_back("state '" + h.states[s] + "' has the wrong number of transition rows");
      continue;
    }
    for (std::size_t a = 0; a < acts.size(); ++a) {
      const std::string where = "delta(" + h.states[s] + "," + acts[a] + ")";
      check_dist(h.delta[s][a], n, where, r);
      for (const auto& [t, w] : h.delta[s][a]) {
        if (t >= 0 && t < n && h.owner[t] == h.owner[s]) r.push_back("non-alternating transition in " + where);
      }
    }
  }
  check_partition(h.obs1_blocks, n, "obs1", r);
  check_partition(h.obs2_blocks, n, "obs2", r);
  check_dist(h.initial, n, "initial", r);
  for (const auto& [s, w] : h.initial) {
    if (s >= 0 && s < n && h.owner[s] != 1) r.push_back("initial distribution puts mass on a Player-2 state");
  }
  return r;
}

int Pomdp::state_id(const std::string& name) const { return find_name(states, name); }

void Pomdp::index_observations() { obs = index_blocks(blocks, num_states()); }

ValidationReport validate_pomdp(const Pomdp& m) {
  ValidationReport r;
  const int n = m.num_states();
  if (n == 0) r.push_back("no states");
  if (m.actions.empty()) r.push_back("empty action set");
  check_duplicates(m.states, "state", r);
  check_duplicates(m.actions, "action", r);
  for (const auto& u : m.unresolved) r.push_back("dangling state '" + u + "'");
  if (static_cast<int>(m.delta.size()) != n) {
    r.push_back("transition table has wrong size");
  } else {
    for (int s = 0; s < n; ++s) {
      if (static_cast<int>(m.delta[s].size()) != m.num_actions()) {
        r.push_back("state '" + m.states[s] + "' has the wrong number of transition rows");
        continue;
      }
      for (int a = 0; a < m.num_actions(); ++a) {
        check_dist(m.delta[s][a], n, "delta(" + m.states[s] + "," + m.actions[a] + ")", r);
      }
    }
  }
  check_partition(m.blocks, n, "obs", r);
  if (m.initial < 0 || m.initial >= n) r.push_back("initial state is not a state");
  if (m.objective) {
    const auto& o = *m.objective;
    if (o.kind == ObjectiveKind::Parity) {
      if (static_cast<int>(o.priority.size()) != n) r.push_back("priority function is not total on states");
    } else if (static_cast<int>(o.target.size()) != n) {
      r.push_back("target set does not match the state set");
    }
  }
  return r;
}

PartialObsGame pomdp_as_game(const Pomdp& m) {
  PartialObsGame h;
  const int n = m.num_states(), k = m.num_actions();
  h.states = m.states;
  h.owner.assign(n, 1);
  h.actions1 = m.actions;
  h.actions2 = {"_"};
  h.delta.resize(n + n * k);
  for (int s = 0; s < n; ++s) {
    for (int a = 0; a < k; ++a) {
      const int mid = n + s * k + a;
      h.states.push_back("(" + m.states[s] + "," + m.actions[a] + ")");
      h.owner.push_back(2);
      h.delta[s].push_back(Dist::dirac(mid));
      h.delta[mid].push_back(m.delta[s][a]);
    }
  }
  for (const auto& b : m.blocks) {
    std::vector<int> blk = b;
    for (int s : b) {
      for (int a = 0; a < k; ++a) blk.push_back(n + s * k + a);
    }
    h.obs1_blocks.push_back(blk);
    h.obs2_blocks.push_back(blk);
  }
  h.initial = Dist::dirac(m.initial);
  h.index_observations();
  return h;
}

// ---------------------------------------------------------------- observations

std::vector<int> observation_seq(const PartialObsGame& h, int player, const PrefixH& rho) {
  std::vector<int> o = rho.seq;
  const auto& ob = h.obs(player);
  for (std::size_t k = 0; k < o.size(); k += 2) o[k] = ob.at(o[k]);
  return o;
}

std::vector<int> observation_seq(const Pomdp& m, const PrefixH& rho) {
  std::vector<int> o = rho.seq;
  for (std::size_t k = 0; k < o.size(); k += 2) o[k] = m.obs.at(o[k]);
  return o;
}

Dist TablePolicy::at(const std::vector<int>& key) const {
  auto it = table_.find(key);
  if (it == table_.end()) throw DomainError("policy undefined at the queried observation sequence");
  return it->second;
}

ObsBasedResult make_observation_based(const PartialObsGame& h, int player, const PrefixTableStrategy& s) {
  std::unordered_map<std::vector<int>, std::pair<PrefixH, Dist>, IntSeqHash> seen;
  auto policy = std::make_shared<TablePolicy>();
  std::vector<std::pair<std::vector<int>, Dist>> rows(s.table().table().begin(), s.table().table().end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [seq, d] : rows) {
    PrefixH rho(seq);
    auto key = observation_seq(h, player, rho);
    auto [it, fresh] = seen.emplace(key, std::make_pair(rho, d));
    if (!fresh && !(it->second.second == d)) {
      return {std::nullopt, ObservationWitness{it->second.first, rho}};
    }
    if (fresh) policy->set(key, d);
  }
  return {ObsBasedStrategy(h, player, policy), std::nullopt};
}

std::optional<ObservationWitness> find_consistency_violation(
    const PartialObsGame& h, int player, const HStrategy& s, int steps,
    const std::function<std::vector<int>(const PrefixH&)>& key_of) {
  std::unordered_map<std::vector<int>, std::pair<PrefixH, Dist>, IntSeqHash> seen;
  std::optional<ObservationWitness> found;
  std::function<void(const PrefixH&, int)> dfs = [&](const PrefixH& rho, int remaining) {
    if (found) return;
    const int last = rho.last();
    if (h.owner[last] == player) {
      Dist d = s.at(rho);
      auto [it, fresh] = seen.emplace(key_of(rho), std::make_pair(rho, d));
      if (!fresh && !(it->second.second == d)) {
        found = ObservationWitness{it->second.first, rho};
        return;
      }
    }
    if (remaining == 0) return;
    for (int a = 0; a < h.num_actions_at(last); ++a) {
      for (const auto& [t, w] : h.delta[last][a]) dfs(rho.extended(a, t), remaining - 1);
    }
  };
  for (const auto& [s0, w] : h.initial) dfs(PrefixH({s0}), steps);
  return found;
}

std::optional<ObservationWitness> find_observation_violation(const PartialObsGame& h, int player,
                                                             const HStrategy& s, int steps) {
  return find_consistency_violation(h, player, s, steps,
                                    [&](const PrefixH& rho) { return observation_seq(h, player, rho); });
}

// ---------------------------------------------------------------- measures

namespace {

void check_prefix(const PartialObsGame& h, const PrefixH& rho) {
  if (rho.seq.empty() || rho.seq.size() % 2 == 0) throw DomainError("malformed prefix");
  for (int j = 0; j <= rho.steps(); ++j) {
    if (rho.state(j) < 0 || rho.state(j) >= h.num_states()) throw DomainError("prefix state id out of range");
    if (j < rho.steps() && (rho.action(j) < 0 || rho.action(j) >= h.num_actions_at(rho.state(j)))) {
      throw DomainError("prefix action id out of range");
    }
  }
}

}  // namespace

Rational cone_prob_pog(const PartialObsGame& h, const HStrategy& alpha, const HStrategy& beta, const PrefixH& rho) {
  check_prefix(h, rho);
  Rational mass = h.initial(rho.state(0));
  PrefixH cur({rho.state(0)});
  for (int j = 0; j < rho.steps() && mass != 0; ++j) {
    const int s = rho.state(j), a = rho.action(j), t = rho.state(j + 1);
    const HStrategy& st = h.owner[s] == 1 ? alpha : beta;
    const Rational d = h.delta[s][a](t);
    if (d == 0) return Rational(0);
    mass *= st.at(cur)(a) * d;
    cur = cur.extended(a, t);
  }
  return mass;
}

void for_each_cone_pog(const PartialObsGame& h, const HStrategy& alpha, const HStrategy& beta, int steps,
                       const std::function<void(const PrefixH&, const Rational&)>& fn) {
  std::function<void(const PrefixH&, const Rational&, int)> dfs = [&](const PrefixH& rho, const Rational& mass,
                                                                       int remaining) {
    if (remaining == 0) {
      fn(rho, mass);
      return;
    }
    const int s = rho.last();
    const Dist choice = (h.owner[s] == 1 ? alpha : beta).at(rho);
    for (const auto& [a, pa] : choice) {
      if (pa == 0) continue;
      for (const auto& [t, pt] : h.delta[s][a]) {
        if (pt != 0) dfs(rho.extended(a, t), mass * pa * pt, remaining - 1);
      }
    }
  };
  for (const auto& [s0, w] : h.initial) {
    if (w != 0) dfs(PrefixH({s0}), w, steps);
  }
}

Rational cone_prob_pomdp(const Pomdp& m, const KeyedPolicy& alpha, const PrefixH& rho) {
  if (rho.seq.empty() || rho.seq.size() % 2 == 0) throw DomainError("malformed prefix");
  for (int j = 0; j <= rho.steps(); ++j) {
    if (rho.state(j) < 0 || rho.state(j) >= m.num_states()) throw DomainError("prefix state id out of range");
    if (j < rho.steps() && (rho.action(j) < 0 || rho.action(j) >= m.num_actions())) {
      throw DomainError("prefix action id out of range");
    }
  }
  if (rho.state(0) != m.initial) return Rational(0);
  Rational mass(1);
  PrefixH cur({rho.state(0)});
  for (int j = 0; j < rho.steps() && mass != 0; ++j) {
    const int s = rho.state(j), a = rho.action(j), t = rho.state(j + 1);
    const Rational d = m.delta[s][a](t);
    if (d == 0) return Rational(0);
    mass *= alpha.at(observation_seq(m, cur))(a) * d;
    cur = cur.extended(a, t);
  }
  return mass;
}

void for_each_cone_pomdp(const Pomdp& m, const KeyedPolicy& alpha, int steps, bool include_zero,
                         const std::function<void(const PrefixH&, const Rational&)>& fn) {
  std::function<void(const PrefixH&, const Rational&, int)> dfs = [&](const PrefixH& rho, const Rational& mass,
                                                                       int remaining) {
    if (remaining == 0) {
      fn(rho, mass);
      return;
    }
    const int s = rho.last();
    const Dist choice = mass == 0 ? Dist() : alpha.at(observation_seq(m, rho));
    for (int a = 0; a < m.num_actions(); ++a) {
      const Rational pa = choice(a);
      if (pa == 0 && !include_zero) continue;
      for (int t = 0; t < m.num_states(); ++t) {
        const Rational child = mass * pa * m.delta[s][a](t);
        if (child != 0 || include_zero) dfs(rho.extended(a, t), child, remaining - 1);
      }
    }
  };
  for (int s0 = 0; s0 < m.num_states(); ++s0) {
    if (s0 == m.initial) {
      dfs(PrefixH({s0}), Rational(1), steps);
    } else if (include_zero) {
      dfs(PrefixH({s0}), Rational(0), steps);
    }
  }
}

std::string format_prefix(const PartialObsGame& h, const PrefixH& p) {
  std::string out;
  for (std::size_t k = 0; k < p.seq.size(); ++k) {
    if (!out.empty()) out += ' ';
    if (k % 2 == 0) {
      out += h.states.at(p.seq[k]);
    } else {
      out += h.actions_of(h.owner.at(p.seq[k - 1])).at(p.seq[k]);
    }
  }
  return out;
}

std::string format_prefix(const Pomdp& m, const PrefixH& p) {
  std::string out;
  for (std::size_t k = 0; k < p.seq.size(); ++k) {
    if (!out.empty()) out += ' ';
    out += k % 2 == 0 ? m.states.at(p.seq[k]) : m.actions.at(p.seq[k]);
  }
  return out;
}

}  // namespace ug
