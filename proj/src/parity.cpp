#include "ug/parity.hpp"

#include <algorithm>
#include <climits>

#include "ug/errors.hpp"

namespace ug {

namespace {

std::vector<std::vector<int>> predecessors(const ParityGame& g) {
  std::vector<std::vector<int>> pred(g.size());
  for (int v = 0; v < g.size(); ++v) {
    for (int w : g.succ[v]) pred[w].push_back(v);
  }
  return pred;
}

}  // namespace

std::vector<bool> attractor(const ParityGame& g, const std::vector<bool>& inside, const std::vector<bool>& target,
                            int player, std::vector<int>* attr_strategy) {
  const int n = g.size();
  std::vector<bool> in_attr(n, false);
  std::vector<int> remaining(n, 0);
  std::vector<int> frontier;
  for (int v = 0; v < n; ++v) {
    if (!inside[v]) continue;
    for (int w : g.succ[v]) remaining[v] += inside[w] ? 1 : 0;
    if (target[v]) {
      in_attr[v] = true;
      frontier.push_back(v);
    }
  }
  const auto pred = predecessors(g);
  std::vector<bool> queued(n, false);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int w : frontier) {
      for (int v : pred[w]) {
        if (!inside[v] || in_attr[v]) continue;
        if (g.owner[v] == player || --remaining[v] == 0) {
          if (!queued[v]) {
            queued[v] = true;
            next.push_back(v);
          }
        }
      }
    }
    // Add the whole layer at once so strategies point strictly inward.
    for (int v : next) {
      if (g.owner[v] == player && attr_strategy) {
        int best = INT_MAX;
        for (int w : g.succ[v]) {
          if (in_attr[w]) best = std::min(best, w);
        }
        (*attr_strategy)[v] = best;
      }
    }
    for (int v : next) in_attr[v] = true;
    frontier = std::move(next);
  }
  return in_attr;
}

namespace {

struct Solver {
  const ParityGame& g;
  std::vector<int> strategy;

  int lowest_inside(int v, const std::vector<bool>& inside) const {
    int best = -1;
    for (int w : g.succ[v]) {
      if (inside[w] && (best < 0 || w < best)) best = w;
    }
    return best;
  }

  // Returns the winner per node of the subgame `inside` (-1 outside).
  std::vector<int> solve(const std::vector<bool>& inside) {
    const int n = g.size();
    std::vector<int> win(n, -1);
    int d = INT_MAX;
    for (int v = 0; v < n; ++v) {
      if (inside[v]) d = std::min(d, g.priority[v]);
    }
    if (d == INT_MAX) return win;
    const int p = d % 2;
    std::vector<bool> top(n, false);
    for (int v = 0; v < n; ++v) top[v] = inside[v] && g.priority[v] == d;
    const std::vector<bool> a = attractor(g, inside, top, p, &strategy);
    std::vector<bool> rest(n, false);
    for (int v = 0; v < n; ++v) rest[v] = inside[v] && !a[v];
    const std::vector<int> sub = solve(rest);
    bool opponent_wins_somewhere = false;
    for (int v = 0; v < n; ++v) opponent_wins_somewhere |= sub[v] == 1 - p;
    if (!opponent_wins_somewhere) {
      for (int v = 0; v < n; ++v) {
        if (!inside[v]) continue;
        win[v] = p;
        if (top[v] && g.owner[v] == p) strategy[v] = lowest_inside(v, inside);
      }
      return win;
    }
    std::vector<bool> lost(n, false);
    for (int v = 0; v < n; ++v) lost[v] = sub[v] == 1 - p;
    const std::vector<bool> b = attractor(g, inside, lost, 1 - p, &strategy);
    std::vector<bool> rest2(n, false);
    for (int v = 0; v < n; ++v) rest2[v] = inside[v] && !b[v];
    const std::vector<int> sub2 = solve(rest2);
    for (int v = 0; v < n; ++v) {
      if (!inside[v]) continue;
      win[v] = b[v] ? 1 - p : sub2[v];
    }
    return win;
  }
};

}  // namespace

ParitySolution zielonka_solve(const ParityGame& g) {
  for (int v = 0; v < g.size(); ++v) {
    if (g.succ[v].empty()) throw DomainError("parity game node without successor");
  }
  Solver s{g, std::vector<int>(g.size(), -1)};
  ParitySolution out;
  out.winner = s.solve(std::vector<bool>(g.size(), true));
  out.strategy.assign(g.size(), -1);
  for (int v = 0; v < g.size(); ++v) {
    if (out.winner[v] == g.owner[v]) out.strategy[v] = s.strategy[v];
  }
  return out;
}

int play_winner(const ParityGame& g, const std::vector<int>& choice, int v) {
  std::vector<int> seen(g.size(), -1);
  int t = 0;
  while (seen[v] < 0) {
    seen[v] = t++;
    v = choice[v];
  }
  int lo = g.priority[v];
  for (int w = choice[v]; w != v; w = choice[w]) lo = std::min(lo, g.priority[w]);
  return lo % 2;
}

}  // namespace ug
