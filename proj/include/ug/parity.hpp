#pragma once

#include <vector>

namespace ug {

// Perfect-information parity game under the min-even convention: player 0
// wins a play iff the least priority seen infinitely often is even.
struct ParityGame {
  std::vector<int> owner;     // 0 or 1
  std::vector<int> priority;  // >= 0
  std::vector<std::vector<int>> succ;

  int size() const { return static_cast<int>(owner.size()); }
  int add_node(int own, int prio) {
    owner.push_back(own);
    priority.push_back(prio);
    succ.emplace_back();
    return size() - 1;
  }
};

struct ParitySolution {
  std::vector<int> winner;    // 0 or 1 per node
  // Memoryless witness: successor chosen at every node won by its owner,
  // -1 elsewhere.
  std::vector<int> strategy;
};

// Recursive (Zielonka) solver. Throws DomainError if a node has no
// successor. Attractor strategies prefer the lowest successor id.
ParitySolution zielonka_solve(const ParityGame& g);

// Attractor of `player` to `target` inside `inside` (both masks). Nodes are
// added layer by layer; attr_strategy gets the chosen successor for player
// nodes added by the construction.
std::vector<bool> attractor(const ParityGame& g, const std::vector<bool>& inside, const std::vector<bool>& target,
                            int player, std::vector<int>* attr_strategy = nullptr);

// Winner of the play that starts at v when both players follow the
// memoryless choices in `choice` (one successor per node).
int play_winner(const ParityGame& g, const std::vector<int>& choice, int v);

}  // namespace ug
