#include "ug/safra.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ug {

std::vector<int> BadPathDpa::Tree::encode() const {
  std::vector<int> c;
  for (std::size_t k = 0; k < parent.size(); ++k) {
    c.push_back(parent[k]);
    c.push_back(static_cast<int>(label[k].size()));
    c.insert(c.end(), label[k].begin(), label[k].end());
  }
  return c;
}

BadPathDpa::Tree BadPathDpa::Tree::decode(const std::vector<int>& code) {
  Tree t;
  for (std::size_t k = 0; k < code.size();) {
    t.parent.push_back(code[k]);
    const int n = code[k + 1];
    t.label.emplace_back(code.begin() + k + 2, code.begin() + k + 2 + n);
    k += 2 + n;
  }
  return t;
}

BadPathDpa::BadPathDpa(std::vector<int> priority) : priority_(std::move(priority)) {
  num_game_states_ = static_cast<int>(priority_.size());
  int hi = 0;
  for (int p : priority_) hi = std::max(hi, p);
  num_odd_ = (hi + 1) / 2;
}

bool BadPathDpa::accepting(int q) const {
  const int k = guess_of(q);
  return k > 0 && priority_[state_of(q)] == 2 * k - 1;
}

std::vector<int> BadPathDpa::automaton_initial(const std::vector<int>& states) const {
  std::vector<int> q;
  for (int s : states) {
    q.push_back(s * (1 + num_odd_));
    for (int k = 1; k <= num_odd_; ++k) {
      if (priority_[s] >= 2 * k - 1) q.push_back(s * (1 + num_odd_) + k);
    }
  }
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  return q;
}

std::vector<int> BadPathDpa::automaton_post(const std::vector<int>& q,
                                            const std::vector<std::pair<int, int>>& relation) const {
  std::set<int> out;
  for (int x : q) {
    const int s = state_of(x), k = guess_of(x);
    for (const auto& [a, b] : relation) {
      if (a != s) continue;
      const int base = b * (1 + num_odd_);
      if (k == 0) {
        out.insert(base);
        for (int k2 = 1; k2 <= num_odd_; ++k2) {
          if (priority_[b] >= 2 * k2 - 1) out.insert(base + k2);
        }
      } else if (priority_[b] >= 2 * k - 1) {
        out.insert(base + k);
      }
    }
  }
  return {out.begin(), out.end()};
}

BadPathDpa::Tree BadPathDpa::initial(const std::vector<int>& states) const {
  Tree t;
  auto q = automaton_initial(states);
  if (!q.empty()) {
    t.parent.push_back(-1);
    t.label.push_back(std::move(q));
  }
  return t;
}

namespace {

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> unite(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

int BadPathDpa::step(Tree& t, const std::vector<std::pair<int, int>>& relation) const {
  const int old_count = static_cast<int>(t.parent.size());
  std::vector<int> parent = t.parent;
  std::vector<std::vector<int>> label = t.label;

  // Branch: every node spawns a youngest child holding its accepting states.
  for (int k = 0; k < old_count; ++k) {
    std::vector<int> acc;
    for (int q : label[k]) {
      if (accepting(q)) acc.push_back(q);
    }
    if (!acc.empty()) {
      parent.push_back(k);
      label.push_back(std::move(acc));
    }
  }
  const int n = static_cast<int>(parent.size());
  for (auto& l : label) l = automaton_post(l, relation);

  std::vector<std::vector<int>> children(n);
  for (int k = 0; k < n; ++k) {
    if (parent[k] >= 0) children[parent[k]].push_back(k);
  }
  // Horizontal merge: a state stays only in the oldest branch that holds it.
  std::function<void(int, const std::vector<int>&)> strip = [&](int k, const std::vector<int>& drop) {
    label[k] = minus(label[k], drop);
    for (int c : children[k]) strip(c, drop);
  };
  for (int k = 0; k < n; ++k) {
    std::vector<int> seen;
    for (int c : children[k]) {
      strip(c, seen);
      seen = unite(seen, label[c]);
    }
  }

  std::vector<bool> removed(n, false), green(n, false);
  for (int k = 0; k < n; ++k) {
    if (parent[k] >= 0 && removed[parent[k]]) removed[k] = true;
    if (label[k].empty()) removed[k] = true;
  }
  // Vertical merge: a node whose children cover it absorbs them.
  for (int k = 0; k < n; ++k) {
    if (removed[k] || children[k].empty()) continue;
    std::vector<int> cover;
    bool any = false;
    for (int c : children[k]) {
      if (!removed[c]) {
        cover = unite(cover, label[c]);
        any = true;
      }
    }
    if (any && cover == label[k]) {
      green[k] = true;
      std::function<void(int)> drop = [&](int x) {
        for (int c : children[x]) {
          removed[c] = true;
          drop(c);
        }
      };
      drop(k);
    }
  }

  int prio = max_priority();
  for (int k = 0; k < old_count; ++k) {
    if (removed[k]) {
      prio = 2 * (k + 1) - 1;
      break;
    }
    if (green[k]) {
      prio = 2 * (k + 1);
      break;
    }
  }

  Tree out;
  std::vector<int> pos(n, -1);
  for (int k = 0; k < n; ++k) {
    if (removed[k]) continue;
    pos[k] = static_cast<int>(out.parent.size());
    out.parent.push_back(parent[k] < 0 ? -1 : pos[parent[k]]);
    out.label.push_back(label[k]);
  }
  t = std::move(out);
  return prio;
}

}  // namespace ug
