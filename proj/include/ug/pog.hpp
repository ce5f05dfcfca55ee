#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ug/distribution.hpp"
#include "ug/game.hpp"
#include "ug/prefix.hpp"

namespace ug {

// Alternating two-player stochastic game with one observation partition per
// player. States owned by Player 1 move with actions1 into Player-2 states and
// vice versa.
struct PartialObsGame {
  std::vector<std::string> states;
  std::vector<int> owner;  // 1 or 2
  std::vector<std::string> actions1;
  std::vector<std::string> actions2;
  // delta[s][a] over the owner's actions; an empty Dist means missing.
  std::vector<std::vector<Dist>> delta;
  std::vector<std::vector<int>> obs1_blocks;
  std::vector<std::vector<int>> obs2_blocks;
  Dist initial;
  std::vector<std::string> unresolved;

  // Block index per state, -1 when uncovered; filled by index_observations().
  std::vector<int> obs1;
  std::vector<int> obs2;

  int num_states() const { return static_cast<int>(states.size()); }
  const std::vector<std::string>& actions_of(int player) const { return player == 1 ? actions1 : actions2; }
  int num_actions_at(int s) const { return static_cast<int>(actions_of(owner[s]).size()); }
  const std::vector<int>& obs(int player) const { return player == 1 ? obs1 : obs2; }
  const std::vector<std::vector<int>>& blocks(int player) const { return player == 1 ? obs1_blocks : obs2_blocks; }
  int state_id(const std::string& name) const;

  void index_observations();
  // True when the player's partition consists of singletons.
  bool complete_observation(int player) const;
};

ValidationReport validate_pog(const PartialObsGame& h);

// Partially observable MDP: the one-player case.
struct Pomdp {
  std::vector<std::string> states;
  std::vector<std::string> actions;
  std::vector<std::vector<Dist>> delta;  // delta[s][a]
  std::vector<std::vector<int>> blocks;
  int initial = 0;
  std::optional<Objective> objective;
  std::vector<std::string> unresolved;

  std::vector<int> obs;  // filled by index_observations()

  int num_states() const { return static_cast<int>(states.size()); }
  int num_actions() const { return static_cast<int>(actions.size()); }
  int state_id(const std::string& name) const;
  void index_observations();
};

ValidationReport validate_pomdp(const Pomdp& m);

// Embeds a POMDP as an alternating game: every Player-1 state s gets one
// Player-2 copy (s, a) per action, with a single Player-2 action. Player-2
// copies share Player 1's observation of s.
PartialObsGame pomdp_as_game(const Pomdp& m);

// Alternating history s0 a0 s1 a1 ... sn stored flat: seq[2j] is a state,
// seq[2j+1] an action of that state's owner.
struct PrefixH {
  std::vector<int> seq;

  PrefixH() = default;
  explicit PrefixH(std::vector<int> s) : seq(std::move(s)) {}

  int steps() const { return static_cast<int>(seq.size() / 2); }
  int state(int j) const { return seq[2 * j]; }
  int action(int j) const { return seq[2 * j + 1]; }
  int last() const { return seq.back(); }
  PrefixH extended(int a, int s) const {
    PrefixH p = *this;
    p.seq.push_back(a);
    p.seq.push_back(s);
    return p;
  }
  friend bool operator==(const PrefixH& a, const PrefixH& b) { return a.seq == b.seq; }
  friend bool operator<(const PrefixH& a, const PrefixH& b) { return a.seq < b.seq; }
};

// o0 a0 o1 a1 ... : states replaced by the player's block index, actions kept.
std::vector<int> observation_seq(const PartialObsGame& h, int player, const PrefixH& rho);
std::vector<int> observation_seq(const Pomdp& m, const PrefixH& rho);

// Distribution over actions as a function of an integer key.
class KeyedPolicy {
 public:
  virtual ~KeyedPolicy() = default;
  virtual Dist at(const std::vector<int>& key) const = 0;
};

class TablePolicy : public KeyedPolicy {
 public:
  Dist at(const std::vector<int>& key) const override;
  void set(std::vector<int> key, Dist d) { table_[std::move(key)] = std::move(d); }
  bool contains(const std::vector<int>& key) const { return table_.count(key) != 0; }
  const auto& table() const { return table_; }

 private:
  std::unordered_map<std::vector<int>, Dist, IntSeqHash> table_;
};

// Strategy in an alternating game, evaluated on prefixes that end in a state
// owned by the strategy's player.
class HStrategy {
 public:
  virtual ~HStrategy() = default;
  virtual Dist at(const PrefixH& rho) const = 0;
};

// Strategy whose output is a function of the owner's observation sequence.
class ObsBasedStrategy : public HStrategy {
 public:
  ObsBasedStrategy(const PartialObsGame& h, int player, std::shared_ptr<const KeyedPolicy> policy)
      : h_(&h), player_(player), policy_(std::move(policy)) {}
  Dist at(const PrefixH& rho) const override { return policy_->at(observation_seq(*h_, player_, rho)); }
  const KeyedPolicy& policy() const { return *policy_; }

 private:
  const PartialObsGame* h_;
  int player_;
  std::shared_ptr<const KeyedPolicy> policy_;
};

// Raw strategy keyed by the full prefix.
class PrefixTableStrategy : public HStrategy {
 public:
  Dist at(const PrefixH& rho) const override { return table_.at(rho.seq); }
  void set(const PrefixH& rho, Dist d) { table_.set(rho.seq, std::move(d)); }
  const TablePolicy& table() const { return table_; }

 private:
  TablePolicy table_;
};

// Two prefixes with the same observation sequence but different outputs.
struct ObservationWitness {
  PrefixH first;
  PrefixH second;
};

// Converts a prefix-keyed table into an observation-keyed strategy, or
// returns a witness pair showing the table is not observation-based.
struct ObsBasedResult {
  std::optional<ObsBasedStrategy> strategy;
  std::optional<ObservationWitness> witness;
};
ObsBasedResult make_observation_based(const PartialObsGame& h, int player, const PrefixTableStrategy& s);

// Scans every prefix of at most `steps` steps that follows transition
// supports from the initial support and ends in a state of `player`.
std::optional<ObservationWitness> find_observation_violation(const PartialObsGame& h, int player,
                                                             const HStrategy& s, int steps);

// Same scan with an arbitrary grouping key in place of the observation
// sequence.
std::optional<ObservationWitness> find_consistency_violation(
    const PartialObsGame& h, int player, const HStrategy& s, int steps,
    const std::function<std::vector<int>(const PrefixH&)>& key_of);

// Classical cone measure seeded by the initial distribution.
Rational cone_prob_pog(const PartialObsGame& h, const HStrategy& alpha, const HStrategy& beta, const PrefixH& rho);

// Visits every positive-mass prefix with exactly `steps` steps.
void for_each_cone_pog(const PartialObsGame& h, const HStrategy& alpha, const HStrategy& beta, int steps,
                       const std::function<void(const PrefixH&, const Rational&)>& fn);

// POMDP prefixes reuse PrefixH (states and actions alternate). Strategies are
// keyed by the observation sequence.
Rational cone_prob_pomdp(const Pomdp& m, const KeyedPolicy& alpha, const PrefixH& rho);
void for_each_cone_pomdp(const Pomdp& m, const KeyedPolicy& alpha, int steps, bool include_zero,
                         const std::function<void(const PrefixH&, const Rational&)>& fn);

std::string format_prefix(const PartialObsGame& h, const PrefixH& p);
std::string format_prefix(const Pomdp& m, const PrefixH& p);

}  // namespace ug
