#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ug/game.hpp"
#include "ug/pog.hpp"
#include "ug/strategy.hpp"

namespace ug {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t hash_key(std::uint64_t seed, const std::vector<int>& key);

// Random distribution over {0..n-1} whose weights are multiples of 1/d for a
// random d <= max_den (a random composition of d into n parts).
Dist random_dist(std::mt19937_64& rng, int n, int max_den = 8);
// Same, seeded deterministically from (seed, key).
Dist hashed_dist(std::uint64_t seed, const std::vector<int>& key, int n, int max_den = 8);

struct RandomGameParams {
  int min_locations = 1;
  int max_locations = 3;
  int inputs = 2;
  int outputs = 2;
  int max_den = 8;
};

UncertaintyGame random_game(std::mt19937_64& rng, const RandomGameParams& p = {});
Objective random_objective(std::mt19937_64& rng, ObjectiveKind kind, int n, int max_priority = 2);

struct RandomPomdpParams {
  int min_states = 1;
  int max_states = 4;
  int actions = 2;
  int max_den = 8;
};

Pomdp random_pomdp(std::mt19937_64& rng, const RandomPomdpParams& p = {});

// What a random strategy may depend on besides the letters played so far.
enum class StrategyShape {
  General,             // the whole (observed) history
  CurrentObservation,  // only the current observed location
  Blind,               // nothing
};

// Tables cover every observed prefix with fewer than `depth` steps.
StrategyG1 random_strategy_g1(const UncertaintyGame& g, int depth, StrategyShape shape, std::uint64_t seed);
// Tables cover every truth prefix that follows transition supports from the
// initial location (and, all-powerful, every observed prefix in its
// uncertainty support). The shape restricts how the all-powerful variant
// reads the observed prefix; ordinary strategies read the whole truth.
StrategyG2 random_strategy_g2(const UncertaintyGame& g, int depth, Player2Variant variant, StrategyShape shape,
                              std::uint64_t seed);

// Deterministic pseudo-random policy over `num_actions` actions that depends
// on the key only through `projection`.
class HashedPolicy : public KeyedPolicy {
 public:
  using Projection = std::function<std::vector<int>(const std::vector<int>&)>;
  HashedPolicy(std::uint64_t seed, int num_actions, Projection projection = nullptr)
      : seed_(seed), num_actions_(num_actions), projection_(std::move(projection)) {}
  Dist at(const std::vector<int>& key) const override {
    return hashed_dist(seed_, projection_ ? projection_(key) : key, num_actions_);
  }

 private:
  std::uint64_t seed_;
  int num_actions_;
  Projection projection_;
};

}  // namespace ug
