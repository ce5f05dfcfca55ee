#pragma once

#include <utility>
#include <vector>

namespace ug {

// Deterministic parity automaton for "some path violates the parity
// condition", read over letters that are relations between consecutive
// state sets. Built as a Safra construction on top of the Buchi automaton
// that guesses the odd priority p that a bad path sees infinitely often
// (and never anything below p afterwards).
//
// Tree nodes are kept in age order, so a node's position only changes when
// an older node dies. The emitted priority follows the min-even convention
// for acceptance of the Buchi automaton:
//   2i   when the oldest node touched this step is the i-th one and it turned green,
//   2i-1 when it was removed,
//   2m+1 when nothing happened (m = number of automaton states).
class BadPathDpa {
 public:
  struct Tree {
    std::vector<int> parent;              // -1 for the root; parent precedes child
    std::vector<std::vector<int>> label;  // sorted automaton states
    std::vector<int> encode() const;
    static Tree decode(const std::vector<int>& code);
  };

  explicit BadPathDpa(std::vector<int> priority);

  int num_automaton_states() const { return num_game_states_ * (1 + num_odd_); }
  // Largest priority step() can return.
  int max_priority() const { return 2 * num_automaton_states() + 1; }

  Tree initial(const std::vector<int>& states) const;
  // Advances along the relation (pairs of game states) and returns the
  // priority of the step.
  int step(Tree& t, const std::vector<std::pair<int, int>>& relation) const;

  // Automaton-level helpers, exposed for testing against a direct Buchi check.
  std::vector<int> automaton_initial(const std::vector<int>& states) const;
  std::vector<int> automaton_post(const std::vector<int>& q, const std::vector<std::pair<int, int>>& relation) const;
  bool accepting(int q) const;

 private:
  int state_of(int q) const { return q / (1 + num_odd_); }
  int guess_of(int q) const { return q % (1 + num_odd_); }  // 0 = none, k = priority 2k-1
  std::vector<int> priority_;
  int num_game_states_;
  int num_odd_;
};

}  // namespace ug
