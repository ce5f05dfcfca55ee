#pragma once

#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ug/game.hpp"
#include "ug/prefix.hpp"
#include "ug/strategy.hpp"

namespace ug {

// Probability that Player 1 observes `observed` while the true history is
// `truth`. Zero unless the two prefixes are action-matching.
Rational obs_seq(const UncertaintyGame& g, const PrefixG& truth, const PrefixG& observed);

// Lazy enumeration of ActMt(rho): every prefix with the letters of rho and an
// arbitrary location in each slot, in odometer order (last slot fastest).
class ActMtRange {
 public:
  ActMtRange(const UncertaintyGame& g, const PrefixG& rho);

  class iterator {
   public:
    iterator(const ActMtRange* r, bool end);
    const PrefixG& operator*() const { return current_; }
    iterator& operator++();
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || current_ == o.current_); }
    bool operator!=(const iterator& o) const { return !(*this == o); }

   private:
    const ActMtRange* range_;
    PrefixG current_;
    bool done_;
  };

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

 private:
  PrefixG rho_;
  int num_locations_;
};

inline ActMtRange enumerate_act_mt(const UncertaintyGame& g, const PrefixG& rho) { return ActMtRange(g, rho); }

// Observed prefixes with positive ObsSeq, each paired with its weight.
using ObservationSupport = std::vector<std::pair<PrefixG, Rational>>;
ObservationSupport observation_support(const UncertaintyGame& g, const PrefixG& truth);

// Cone probabilities under a fixed strategy pair. Results are memoised per
// prefix; one instance must not be shared between threads.
class ConeMeasure {
 public:
  ConeMeasure(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta);

  Rational cone(const PrefixG& rho);

  // Visits every prefix with exactly `steps` steps. With include_zero the
  // visit covers all |L|^(n+1) (|I||O|)^n prefixes, otherwise only those of
  // positive mass.
  void for_each_cone(int steps, bool include_zero,
                     const std::function<void(const PrefixG&, const Rational&)>& fn);

 private:
  struct Node {
    Rational mass;
    ObservationSupport observed;
  };
  // Mass factor of one step, excluding Delta.
  Rational step_factor(const PrefixG& rho, const ObservationSupport& observed, int in, int out) const;
  const Node& node(const PrefixG& rho);
  void dfs(const PrefixG& rho, const Rational& mass, const ObservationSupport& observed, int remaining,
           bool include_zero, const std::function<void(const PrefixG&, const Rational&)>& fn);

  const UncertaintyGame& g_;
  const StrategyG1& alpha_;
  const StrategyG2& beta_;
  std::unordered_map<PrefixG, Node, PrefixGHash> memo_;
};

Rational cone_prob(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta, const PrefixG& rho);

// Sum of cone masses over all n-step prefixes satisfying `pred`.
Rational event_prob_at_depth(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta,
                             const std::function<bool(const PrefixG&)>& pred, int n);

}  // namespace ug
