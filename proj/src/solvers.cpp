#include "ug/solvers.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "ug/errors.hpp"
#include "ug/safra.hpp"

namespace ug {

const char* win_mode_name(WinMode m) {
  switch (m) {
    case WinMode::Sure: return "sure";
    case WinMode::AlmostSure: return "almost";
    case WinMode::Positive: return "positive";
  }
  return "?";
}

namespace {

using Relation = std::vector<std::pair<int, int>>;

struct Split {
  std::vector<int> set;
  Relation rel;
};

// Successors of `from` under action a (per state), grouped by Player-1
// observation. `skip` drops source states, `drop` drops successors.
std::map<int, Split> post_by_obs(const PartialObsGame& h, const std::vector<int>& from, int a,
                                 const std::function<bool(int)>& skip = nullptr,
                                 const std::function<bool(int)>& drop = nullptr) {
  std::map<int, Split> out;
  for (int s : from) {
    if (skip && skip(s)) continue;
    for (const auto& [t, p] : h.delta[s][a]) {
      if (drop && drop(t)) continue;
      auto& sp = out[h.obs1[t]];
      sp.set.push_back(t);
      sp.rel.emplace_back(s, t);
    }
  }
  for (auto& [o, sp] : out) {
    std::sort(sp.set.begin(), sp.set.end());
    sp.set.erase(std::unique(sp.set.begin(), sp.set.end()), sp.set.end());
  }
  return out;
}

std::map<int, std::vector<int>> initial_by_obs(const PartialObsGame& h) {
  std::map<int, std::vector<int>> out;
  for (const auto& [s, p] : h.initial) out[h.obs1[s]].push_back(s);
  return out;
}

int num_actions_level(const PartialObsGame& h, int level) {
  return static_cast<int>(h.actions_of(level).size());
}

bool subset_of(const std::vector<int>& set, const std::vector<bool>& mask) {
  return std::all_of(set.begin(), set.end(), [&](int s) { return mask[s]; });
}

}  // namespace

KnowledgeGame knowledge_construction(const PartialObsGame& h) {
  KnowledgeGame k;
  std::map<std::pair<int, std::vector<int>>, int> ids;
  std::deque<int> queue;
  auto id_of = [&](int level, const std::vector<int>& set) {
    auto [it, fresh] = ids.emplace(std::make_pair(level, set), static_cast<int>(k.sets.size()));
    if (fresh) {
      k.sets.push_back(set);
      k.level.push_back(level);
      k.observation.push_back(h.obs1[set.front()]);
      k.succ.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (const auto& [o, set] : initial_by_obs(h)) k.initial.push_back(id_of(1, set));
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int level = k.level[v];
    const int na = num_actions_level(h, level);
    std::vector<std::vector<int>> succ(na);
    for (int a = 0; a < na; ++a) {
      for (auto& [o, sp] : post_by_obs(h, k.sets[v], a)) succ[a].push_back(id_of(3 - level, sp.set));
    }
    k.succ[v] = std::move(succ);
  }
  return k;
}

// ---------------------------------------------------------------- sure winning

namespace {

struct Outcome {
  int sink = -1;  // 0: Player 1 has won, 1: Player 1 has lost
  std::vector<int> extra;
  int priority = 0;
};

class Tracker {
 public:
  virtual ~Tracker() = default;
  virtual Outcome start(const std::vector<int>& k0) const = 0;
  virtual Outcome step(const std::vector<int>& extra, const Relation& rel, const std::vector<int>& next) const = 0;
  virtual int neutral() const { return 2; }
};

std::vector<int> image(const std::vector<int>& from, const Relation& rel, const std::vector<bool>* exclude) {
  std::vector<int> out;
  for (const auto& [s, t] : rel) {
    if (std::binary_search(from.begin(), from.end(), s) && !(exclude && (*exclude)[t])) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> without(const std::vector<int>& set, const std::vector<bool>& mask) {
  std::vector<int> out;
  for (int s : set) {
    if (!mask[s]) out.push_back(s);
  }
  return out;
}

// Paths that have not visited the target yet; won once none is left.
class ReachTracker : public Tracker {
 public:
  explicit ReachTracker(std::vector<bool> t) : t_(std::move(t)) {}
  Outcome start(const std::vector<int>& k0) const override { return wrap(without(k0, t_)); }
  Outcome step(const std::vector<int>& extra, const Relation& rel, const std::vector<int>&) const override {
    return wrap(image(extra, rel, &t_));
  }

 private:
  Outcome wrap(std::vector<int> pending) const {
    Outcome o;
    if (pending.empty()) o.sink = 0;
    o.extra = std::move(pending);
    o.priority = 1;
    return o;
  }
  std::vector<bool> t_;
};

class SafeTracker : public Tracker {
 public:
  explicit SafeTracker(std::vector<bool> safe) : safe_(std::move(safe)) {}
  Outcome start(const std::vector<int>& k0) const override { return check(k0); }
  Outcome step(const std::vector<int>&, const Relation&, const std::vector<int>& next) const override {
    return check(next);
  }

 private:
  Outcome check(const std::vector<int>& k) const {
    Outcome o;
    if (!subset_of(k, safe_)) o.sink = 1;
    return o;
  }
  std::vector<bool> safe_;
};

// Breakpoint construction: `extra` holds the paths that still owe a visit
// to the target since the last breakpoint.
class BuchiTracker : public Tracker {
 public:
  explicit BuchiTracker(std::vector<bool> t) : t_(std::move(t)) {}
  Outcome start(const std::vector<int>& k0) const override {
    Outcome o;
    o.extra = without(k0, t_);
    return o;
  }
  Outcome step(const std::vector<int>& extra, const Relation& rel, const std::vector<int>& next) const override {
    Outcome o;
    o.extra = image(extra, rel, &t_);
    if (o.extra.empty()) {
      o.priority = 0;
      o.extra = without(next, t_);
    } else {
      o.priority = 1;
    }
    return o;
  }

 private:
  std::vector<bool> t_;
};

// Safra tree of the automaton that looks for a bad path; Player 1 wins when
// that automaton rejects, i.e. when its least recurring priority is odd.
class SafraTracker : public Tracker {
 public:
  explicit SafraTracker(std::vector<int> priority) : dpa_(std::move(priority)) {}
  Outcome start(const std::vector<int>& k0) const override {
    Outcome o;
    o.extra = dpa_.initial(k0).encode();
    return o;
  }
  Outcome step(const std::vector<int>& extra, const Relation& rel, const std::vector<int>&) const override {
    auto t = BadPathDpa::Tree::decode(extra);
    Outcome o;
    o.priority = dpa_.step(t, rel) + 1;
    o.extra = t.encode();
    return o;
  }
  int neutral() const override { return dpa_.max_priority() + 2; }

 private:
  BadPathDpa dpa_;
};

WinningRegion solve_with_tracker(const PartialObsGame& h, const Tracker& tr) {
  ParityGame pg;
  const int neutral = tr.neutral();
  const int root = pg.add_node(1, neutral);
  const int win = pg.add_node(0, 0);
  const int lose = pg.add_node(0, 1);
  pg.succ[win] = {win};
  pg.succ[lose] = {lose};

  // Node kinds: 0 Player-1 choice, 1 observation after Player 1, 2 Player-2
  // choice, 3 observation after Player 2.
  struct Info {
    int kind;
    std::vector<int> set;
    std::vector<int> extra;
    int action;
  };
  std::vector<Info> info(pg.size());
  std::map<std::vector<int>, int> ids;
  std::deque<int> queue;
  auto node = [&](int kind, const std::vector<int>& set, const std::vector<int>& extra, int action) {
    std::vector<int> key{kind, action, static_cast<int>(extra.size())};
    key.insert(key.end(), extra.begin(), extra.end());
    key.insert(key.end(), set.begin(), set.end());
    auto [it, fresh] = ids.emplace(key, pg.size());
    if (fresh) {
      pg.add_node(kind == 0 ? 0 : 1, neutral);
      info.push_back({kind, set, extra, action});
      queue.push_back(it->second);
    }
    return it->second;
  };
  auto link = [&](int from, const Outcome& o, int kind, const std::vector<int>& set) {
    const int to = o.sink == 0 ? win : o.sink == 1 ? lose : node(kind, set, o.extra, -1);
    const int t = pg.add_node(0, o.priority);
    info.push_back({-1, {}, {}, -1});
    pg.succ[t] = {to};
    pg.succ[from].push_back(t);
  };

  for (const auto& [o, set] : initial_by_obs(h)) {
    Outcome out = tr.start(set);
    out.priority = neutral;
    link(root, out, 0, set);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const Info cur = info[v];
    if (cur.kind == 0 || cur.kind == 2) {
      const int level = cur.kind == 0 ? 1 : 2;
      for (int a = 0; a < num_actions_level(h, level); ++a) {
        const int w = node(cur.kind + 1, cur.set, cur.extra, a);  // may grow pg.succ
        pg.succ[v].push_back(w);
      }
    } else {
      for (auto& [o, sp] : post_by_obs(h, cur.set, cur.action)) {
        link(v, tr.step(cur.extra, sp.rel, sp.set), cur.kind == 1 ? 2 : 0, sp.set);
      }
      if (pg.succ[v].empty()) pg.succ[v] = {win};
    }
  }

  const ParitySolution sol = zielonka_solve(pg);
  WinningRegion r;
  r.initial_winning = sol.winner[root] == 0;
  r.explored = static_cast<std::size_t>(pg.size());
  std::set<std::vector<int>> won;
  for (int v = 0; v < pg.size(); ++v) {
    if (info[v].kind != 0 || sol.winner[v] != 0) continue;
    won.insert(info[v].set);
    r.witness.push_back({info[v].set, info[v].extra, {info[sol.strategy[v]].action}});
  }
  r.winning.assign(won.begin(), won.end());
  return r;
}

// A Player 2 with a single action has nothing to choose, so its observation
// does not matter.
void require_one_sided(const PartialObsGame& h) {
  if (h.actions2.size() > 1 && !h.complete_observation(2)) {
    throw DomainError("Player 2 must observe the state; reduce in all-powerful mode for sure winning");
  }
}

std::vector<bool> target_of(const PartialObsGame& h, const StateObjective& obj) {
  if (static_cast<int>(obj.target.size()) != h.num_states()) throw DomainError("objective does not cover the states");
  return obj.target;
}

}  // namespace

WinningRegion sure_winning(const PartialObsGame& h, const StateObjective& obj) {
  require_one_sided(h);
  WinningRegion r;
  switch (obj.kind) {
    case ObjectiveKind::Reach: r = solve_with_tracker(h, ReachTracker(target_of(h, obj))); break;
    case ObjectiveKind::Safe: r = solve_with_tracker(h, SafeTracker(target_of(h, obj))); break;
    case ObjectiveKind::Buchi: r = solve_with_tracker(h, BuchiTracker(target_of(h, obj))); break;
    case ObjectiveKind::CoBuchi:
    case ObjectiveKind::Parity: r = solve_with_tracker(h, SafraTracker(compile_priorities(obj))); break;
  }
  r.mode = WinMode::Sure;
  r.objective = obj.kind;
  return r;
}

WinningRegion detail::sure_winning_safra(const PartialObsGame& h, const StateObjective& obj) {
  require_one_sided(h);
  WinningRegion r = solve_with_tracker(h, SafraTracker(compile_priorities(obj)));
  r.mode = WinMode::Sure;
  r.objective = obj.kind;
  return r;
}

// ---------------------------------------------------------------- almost-sure

namespace {

// Knowledge graph for the belief fixpoints. With `absorbing`, target states
// are dropped from every set: paths that reached the target are done.
struct BeliefGraph {
  std::vector<std::vector<int>> sets1, sets2;
  // next1[k][a] = middle nodes (one per observation); next2[m][b] = Player-1 nodes.
  std::vector<std::vector<std::vector<int>>> next1, next2;
  std::vector<int> initial;  // -1 for an empty (already won) set
};

BeliefGraph build_beliefs(const PartialObsGame& h, const std::vector<bool>& target, bool absorbing) {
  BeliefGraph g;
  std::map<std::vector<int>, int> id1, id2;
  std::deque<std::pair<int, int>> queue;
  auto get = [&](int level, const std::vector<int>& set) {
    auto& ids = level == 1 ? id1 : id2;
    auto& sets = level == 1 ? g.sets1 : g.sets2;
    auto [it, fresh] = ids.emplace(set, static_cast<int>(sets.size()));
    if (fresh) {
      sets.push_back(set);
      (level == 1 ? g.next1 : g.next2).emplace_back();
      queue.emplace_back(level, it->second);
    }
    return it->second;
  };
  auto drop = [&](int t) { return absorbing && target[t]; };
  for (const auto& [o, set] : initial_by_obs(h)) {
    std::vector<int> k;
    for (int s : set) {
      if (!drop(s)) k.push_back(s);
    }
    g.initial.push_back(k.empty() ? -1 : get(1, k));
  }
  while (!queue.empty()) {
    const auto [level, v] = queue.front();
    queue.pop_front();
    const std::vector<int> set = (level == 1 ? g.sets1 : g.sets2)[v];
    const int na = num_actions_level(h, level);
    std::vector<std::vector<int>> nx(na);
    for (int a = 0; a < na; ++a) {
      for (auto& [o, sp] : post_by_obs(h, set, a, nullptr, drop)) nx[a].push_back(get(3 - level, sp.set));
    }
    (level == 1 ? g.next1 : g.next2)[v] = std::move(nx);
  }
  return g;
}

int find_by_obs(const PartialObsGame& h, const std::vector<std::vector<int>>& sets, const std::vector<int>& cands,
                int state) {
  for (int c : cands) {
    if (h.obs1[sets[c].front()] == h.obs1[state]) return c;
  }
  return -1;
}

int index_in(const std::vector<int>& set, int s) {
  return static_cast<int>(std::lower_bound(set.begin(), set.end(), s) - set.begin());
}

WinningRegion almost_sure_core(const PartialObsGame& h, const std::vector<bool>& target, bool reach) {
  const BeliefGraph g = build_beliefs(h, target, reach);
  const int n1 = static_cast<int>(g.sets1.size()), n2 = static_cast<int>(g.sets2.size());
  const int na1 = num_actions_level(h, 1), na2 = num_actions_level(h, 2);
  std::vector<bool> in_w(n1, true);
  std::vector<std::vector<int>> allowed(n1);

  for (bool changed = true; changed;) {
    changed = false;
    // Actions that keep every successor knowledge inside W.
    for (bool shrink = true; shrink;) {
      shrink = false;
      for (int k = 0; k < n1; ++k) {
        if (!in_w[k]) continue;
        allowed[k].clear();
        for (int a = 0; a < na1; ++a) {
          bool ok = true;
          for (int m : g.next1[k][a]) {
            for (int b = 0; b < na2 && ok; ++b) {
              for (int k2 : g.next2[m][b]) ok = ok && in_w[k2];
            }
          }
          if (ok) allowed[k].push_back(a);
        }
        if (allowed[k].empty()) {
          in_w[k] = false;
          shrink = changed = true;
        }
      }
    }
    // Positive attractor to the target on (state, knowledge) pairs: Player 1
    // (uniform over allowed actions) and chance are existential, Player 2 is
    // universal.
    std::vector<std::vector<char>> at1(n1), at2(n2);
    for (int k = 0; k < n1; ++k) {
      at1[k].assign(g.sets1[k].size(), 0);
      for (std::size_t j = 0; j < g.sets1[k].size(); ++j) at1[k][j] = !reach && target[g.sets1[k][j]];
    }
    for (int m = 0; m < n2; ++m) {
      at2[m].assign(g.sets2[m].size(), 0);
      for (std::size_t j = 0; j < g.sets2[m].size(); ++j) at2[m][j] = !reach && target[g.sets2[m][j]];
    }
    for (bool grow = true; grow;) {
      grow = false;
      for (int k = 0; k < n1; ++k) {
        if (!in_w[k]) continue;
        for (std::size_t j = 0; j < g.sets1[k].size(); ++j) {
          if (at1[k][j]) continue;
          const int s = g.sets1[k][j];
          bool hit = false;
          for (int a : allowed[k]) {
            for (const auto& [t, p] : h.delta[s][a]) {
              if (reach && target[t]) {
                hit = true;
              } else {
                const int m = find_by_obs(h, g.sets2, g.next1[k][a], t);
                hit = hit || (m >= 0 && at2[m][index_in(g.sets2[m], t)]);
              }
              if (hit) break;
            }
            if (hit) break;
          }
          if (hit) at1[k][j] = grow = true;
        }
      }
      for (int m = 0; m < n2; ++m) {
        for (std::size_t j = 0; j < g.sets2[m].size(); ++j) {
          if (at2[m][j]) continue;
          const int t = g.sets2[m][j];
          bool all = true;
          for (int b = 0; b < na2 && all; ++b) {
            bool some = false;
            for (const auto& [u, p] : h.delta[t][b]) {
              if (reach && target[u]) {
                some = true;
              } else {
                const int k2 = find_by_obs(h, g.sets1, g.next2[m][b], u);
                some = some || (k2 >= 0 && in_w[k2] && at1[k2][index_in(g.sets1[k2], u)]);
              }
              if (some) break;
            }
            all = some;
          }
          if (all) at2[m][j] = grow = true;
        }
      }
    }
    for (int k = 0; k < n1; ++k) {
      if (!in_w[k]) continue;
      if (std::find(at1[k].begin(), at1[k].end(), 0) != at1[k].end()) {
        in_w[k] = false;
        changed = true;
      }
    }
  }

  WinningRegion r;
  r.mode = WinMode::AlmostSure;
  r.explored = static_cast<std::size_t>(n1 + n2);
  r.initial_winning = std::all_of(g.initial.begin(), g.initial.end(), [&](int k) { return k < 0 || in_w[k]; });
  for (int k = 0; k < n1; ++k) {
    if (!in_w[k]) continue;
    r.winning.push_back(g.sets1[k]);
    r.witness.push_back({g.sets1[k], {}, allowed[k]});
  }
  return r;
}

}  // namespace

WinningRegion almost_sure_reach(const PartialObsGame& h, const std::vector<bool>& target) {
  WinningRegion r = almost_sure_core(h, target, true);
  r.objective = ObjectiveKind::Reach;
  return r;
}

WinningRegion almost_sure_buchi(const PartialObsGame& h, const std::vector<bool>& target) {
  WinningRegion r = almost_sure_core(h, target, false);
  r.objective = ObjectiveKind::Buchi;
  return r;
}

WinningRegion almost_sure_safety(const PartialObsGame& h, const std::vector<bool>& safe) {
  Objective o;
  o.kind = ObjectiveKind::Safe;
  o.target = safe;
  WinningRegion r = sure_winning(h, o);
  r.mode = WinMode::AlmostSure;
  return r;
}

// ---------------------------------------------------------------- positive

WinningRegion positive_reach(const PartialObsGame& h, const std::vector<bool>& target) {
  const int n = h.num_states();
  std::vector<bool> attr = target;
  for (bool grow = true; grow;) {
    grow = false;
    for (int s = 0; s < n; ++s) {
      if (attr[s]) continue;
      bool in;
      if (h.owner[s] == 1) {
        in = false;
        for (const auto& row : h.delta[s]) {
          for (const auto& [t, p] : row) in = in || attr[t];
        }
      } else {
        in = true;
        for (const auto& row : h.delta[s]) {
          bool some = false;
          for (const auto& [t, p] : row) some = some || attr[t];
          in = in && some;
        }
      }
      if (in) attr[s] = grow = true;
    }
  }
  WinningRegion r;
  r.mode = WinMode::Positive;
  r.objective = ObjectiveKind::Reach;
  r.explored = static_cast<std::size_t>(n);
  for (int s = 0; s < n; ++s) {
    if (attr[s]) r.winning.push_back({s});
  }
  for (const auto& [s, p] : h.initial) r.initial_winning = r.initial_winning || attr[s];

  // One-player games admit a fixed action word: shortest path to the target.
  if (r.initial_winning && h.actions2.size() == 1) {
    std::vector<int> prev(n, -2), via(n, -1);
    std::deque<int> queue;
    for (const auto& [s, p] : h.initial) {
      prev[s] = -1;
      queue.push_back(s);
    }
    int hit = -1;
    while (!queue.empty() && hit < 0) {
      const int s = queue.front();
      queue.pop_front();
      if (target[s]) {
        hit = s;
        break;
      }
      for (int a = 0; a < h.num_actions_at(s); ++a) {
        for (const auto& [t, p] : h.delta[s][a]) {
          if (prev[t] != -2) continue;
          prev[t] = s;
          via[t] = a;
          queue.push_back(t);
        }
      }
    }
    for (int s = hit; s >= 0 && prev[s] >= 0; s = prev[s]) {
      if (h.owner[prev[s]] == 1) r.action_word.push_back(via[s]);
    }
    std::reverse(r.action_word.begin(), r.action_word.end());
  }
  return r;
}

namespace {

// Knowledge game from every singleton in which paths through a "touching"
// chance node are dropped, solved for safety. Returns the states whose
// singleton node is winning, and a witness for the winning Player-1 nodes.
std::vector<bool> singleton_safety(const PartialObsGame& h, const std::vector<bool>& safe,
                                   const std::vector<bool>& x, std::vector<WitnessRow>* witness,
                                   std::size_t* explored) {
  const int n = h.num_states();
  auto touching = [&](int s, int a) {
    for (const auto& [t, p] : h.delta[s][a]) {
      if (x[t]) return true;
    }
    return false;
  };
  std::vector<std::vector<int>> sets;
  std::vector<int> level;
  std::vector<std::vector<std::vector<int>>> next;  // next[v][a]; empty = all paths dropped
  std::map<std::pair<int, std::vector<int>>, int> ids;
  std::deque<int> queue;
  auto get = [&](int lv, const std::vector<int>& set) {
    auto [it, fresh] = ids.emplace(std::make_pair(lv, set), static_cast<int>(sets.size()));
    if (fresh) {
      sets.push_back(set);
      level.push_back(lv);
      next.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  std::vector<int> single(n);
  for (int s = 0; s < n; ++s) single[s] = get(h.owner[s], {s});
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int lv = level[v];
    const std::vector<int> set = sets[v];
    std::vector<std::vector<int>> nx(num_actions_level(h, lv));
    for (int a = 0; a < static_cast<int>(nx.size()); ++a) {
      auto skip = [&](int s) { return touching(s, a); };
      for (auto& [o, sp] : post_by_obs(h, set, a, skip)) nx[a].push_back(get(3 - lv, sp.set));
    }
    next[v] = std::move(nx);
  }
  const int nn = static_cast<int>(sets.size());
  std::vector<bool> good(nn);
  for (int v = 0; v < nn; ++v) good[v] = subset_of(sets[v], safe);
  for (bool shrink = true; shrink;) {
    shrink = false;
    for (int v = 0; v < nn; ++v) {
      if (!good[v]) continue;
      bool keep = level[v] != 1;
      for (const auto& succ : next[v]) {
        const bool all = std::all_of(succ.begin(), succ.end(), [&](int w) { return good[w]; });
        keep = level[v] == 1 ? (keep || all) : (keep && all);
      }
      if (!keep) good[v] = false, shrink = true;
    }
  }
  if (explored) *explored = static_cast<std::size_t>(nn);
  if (witness) {
    witness->clear();
    for (int v = 0; v < nn; ++v) {
      if (!good[v] || level[v] != 1) continue;
      for (int a = 0; a < static_cast<int>(next[v].size()); ++a) {
        if (std::all_of(next[v][a].begin(), next[v][a].end(), [&](int w) { return good[w]; })) {
          witness->push_back({sets[v], {}, {a}});
          break;
        }
      }
    }
  }
  std::vector<bool> y(n);
  for (int s = 0; s < n; ++s) y[s] = good[single[s]];
  return y;
}

}  // namespace

// X is the least set with X = Y(X), where Y(X) holds the states s such that
// Player 1, pretending to know s, keeps every path safe except those passing
// a chance node with a successor in X. Player 1 randomly guesses both the
// state and the moment to commit, so reaching such a chance node with
// positive probability is as good as winning. Outside X, Player 2 can keep
// the play outside X and every state leaves the safe set within a bounded
// number of steps with probability bounded below, so safety has probability
// zero there.
WinningRegion positive_safety(const PartialObsGame& h, const std::vector<bool>& safe) {
  require_one_sided(h);
  std::vector<bool> x(h.num_states(), false);
  WinningRegion r;
  for (;;) {
    std::vector<bool> y = singleton_safety(h, safe, x, &r.witness, &r.explored);
    if (y == x) break;
    x = std::move(y);
  }
  r.mode = WinMode::Positive;
  r.objective = ObjectiveKind::Safe;
  for (int s = 0; s < h.num_states(); ++s) {
    if (x[s]) r.winning.push_back({s});
  }
  for (const auto& [s, p] : h.initial) r.initial_winning = r.initial_winning || x[s];
  return r;
}

// ---------------------------------------------------------------- dispatch

StateObjective lift_pomdp_objective(const Pomdp& m, const Objective& obj) {
  StateObjective o;
  o.kind = obj.kind;
  const int n = m.num_states(), k = m.num_actions();
  auto lift = [&](const auto& v, auto& out) {
    out.assign(v.begin(), v.end());
    for (int s = 0; s < n; ++s) {
      for (int a = 0; a < k; ++a) out.push_back(v[s]);
    }
  };
  if (obj.kind == ObjectiveKind::Parity) {
    lift(obj.priority, o.priority);
  } else {
    lift(obj.target, o.target);
  }
  return o;
}

namespace {

const char* kUndecidable = "undecidable";
const char* kTwoExp = "2EXPTIME upper bound, EXPTIME-hard (no algorithm implemented)";
const char* kExpNoAlgo = "EXPTIME-complete (no algorithm implemented)";

const char* unsupported_cell(ObjectiveKind k, WinMode mode, bool all_powerful) {
  using K = ObjectiveKind;
  if (mode == WinMode::AlmostSure && (k == K::CoBuchi || k == K::Parity)) return kUndecidable;
  if (mode == WinMode::Positive && (k == K::Buchi || k == K::Parity)) return kUndecidable;
  if (all_powerful) {
    if (mode == WinMode::Positive && k == K::CoBuchi) return kExpNoAlgo;
    return nullptr;
  }
  if (mode == WinMode::AlmostSure && (k == K::Reach || k == K::Buchi)) return kTwoExp;
  if (mode == WinMode::Positive && (k == K::Safe || k == K::CoBuchi)) return kTwoExp;
  return nullptr;
}

}  // namespace

std::optional<std::string> unsupported_classification(ObjectiveKind k, WinMode mode, bool all_powerful) {
  if (const char* c = unsupported_cell(k, mode, all_powerful)) return std::string(c);
  return std::nullopt;
}

namespace {

WinningRegion run_solver(const PartialObsGame& h, const StateObjective& o, WinMode mode) {
  switch (mode) {
    case WinMode::Sure:
      return sure_winning(h, o);
    case WinMode::AlmostSure:
      if (o.kind == ObjectiveKind::Reach) return almost_sure_reach(h, o.target);
      if (o.kind == ObjectiveKind::Buchi) return almost_sure_buchi(h, o.target);
      return almost_sure_safety(h, o.target);
    case WinMode::Positive:
      if (o.kind == ObjectiveKind::Reach) return positive_reach(h, o.target);
      return positive_safety(h, o.target);
  }
  throw DomainError("unknown mode");
}

}  // namespace

SolveResult solve_uncertainty_game(const UncertaintyGame& g, const Objective& obj, WinMode mode,
                                   ReductionMode player2) {
  SolveResult res;
  if (const char* c = unsupported_cell(obj.kind, mode, player2 == ReductionMode::AllPowerful)) {
    res.classification = c;
    return res;
  }
  // Every supported cell is solved on the all-powerful reduction. Sure
  // winning and almost-sure safety depend only on transition supports, and
  // the positive-reachability attractor of the reduced game depends only on
  // the first component, which Player 2 sees in both modes.
  const ReducedGame r = reduce_game(g, obj, ReductionMode::AllPowerful);
  StateObjective o;
  o.kind = obj.kind;
  o.target = r.target;
  o.priority = r.priority;
  res.supported = true;
  res.region = run_solver(r.pog, o, mode);
  return res;
}

SolveResult solve_pomdp(const Pomdp& m, const Objective& obj, WinMode mode) {
  SolveResult res;
  if (const char* c = unsupported_cell(obj.kind, mode, true)) {
    res.classification = c;
    return res;
  }
  const PartialObsGame h = pomdp_as_game(m);
  res.supported = true;
  res.region = run_solver(h, lift_pomdp_objective(m, obj), mode);
  return res;
}

}  // namespace ug
