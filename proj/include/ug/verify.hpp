#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ug/game.hpp"
#include "ug/pog.hpp"
#include "ug/random.hpp"
#include "ug/reduce_forward.hpp"
#include "ug/strategy.hpp"

namespace ug {

enum class LemmaKind {
  ObsSeqConditional,
  ConeForwardG2H,
  ConeForwardH2G,
  PomdpObsSeqFormula,
  ConePomdpH2G,
  ConePomdpG2H,
  ObsBasedMapping,
  PriorityLift,  // not part of "all"; used to catch a broken priority lift
};

const char* lemma_name(LemmaKind k);
std::optional<LemmaKind> parse_lemma_kind(const std::string& s);
// The seven correspondence checks selected by "all".
const std::vector<LemmaKind>& all_lemmas();
bool is_pomdp_lemma(LemmaKind k);

struct Counterexample {
  std::string left;   // prefix (or prefix pair) on the first side
  std::string right;  // what it was compared against
  Rational left_value;
  Rational right_value;
  std::string note;
};

struct LemmaReport {
  LemmaKind kind = LemmaKind::ObsSeqConditional;
  std::string instance;
  std::size_t checked = 0;
  std::optional<Counterexample> counterexample;
  // Set when the instance exceeds the enumeration bound; nothing was checked.
  std::optional<std::string> refusal;

  bool verified() const { return !counterexample && !refusal; }
};

// Deliberate corruptions of the forward reduction.
enum class Mutation {
  None,
  DropUn,         // Player-2 rows omit the uncertainty factor
  SwapObs1,       // Player 1 observes the first component
  BreakPriority,  // priorities and targets read the second component
};
const char* mutation_name(Mutation m);
void apply_mutation(ReducedGame& r, const UncertaintyGame& g, Mutation m);

struct GameInstance {
  UncertaintyGame game;  // carries an objective for PriorityLift
  StrategyG1 alpha;
  StrategyG2 beta;
  Player2Variant variant = Player2Variant::Ordinary;
  // Seed and shape of the observation-based H strategies used by
  // ConeForwardH2G.
  std::uint64_t seed = 0;
  StrategyShape shape = StrategyShape::General;
  std::string description;
};

struct PomdpInstance {
  Pomdp pomdp;
  std::uint64_t seed = 0;
  StrategyShape shape = StrategyShape::General;
  std::string description;
};

GameInstance random_game_instance(std::uint64_t seed, int depth, Player2Variant variant, StrategyShape shape,
                                  const RandomGameParams& p = {});
PomdpInstance random_pomdp_instance(std::uint64_t seed, StrategyShape shape, const RandomPomdpParams& p = {});

// Upper bound on the prefix pairs a check enumerates, and the bound in force
// (UG_MAX_ENUM when set, otherwise the cost of 4 locations, 2+2 letters and
// depth 3).
std::uint64_t enumeration_cost(int locations, int letters, int depth);
std::uint64_t enumeration_bound();

LemmaReport check_lemma(LemmaKind kind, const GameInstance& inst, int depth, Mutation mutation = Mutation::None);
LemmaReport check_lemma(LemmaKind kind, const PomdpInstance& inst, int depth);

// ---------------------------------------------------------------- sampling

struct SampleTrace {
  std::uint64_t seed = 0;
  PrefixG truth;
  PrefixG observed;  // same letters as truth, locations drawn from un
};

// One play of `depth` steps: Player 1 acts on the observed prefix, Player 2
// on the true prefix (and the observed one when all-powerful).
SampleTrace sample_play(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta, int depth,
                        std::uint64_t seed);

struct ConeEstimate {
  std::size_t samples = 0;
  std::size_t hits = 0;
  double mean = 0;
  double stderr_hat = 0;  // binomial standard error of the estimate
};

// Frequency with which the first steps of sampled plays equal rho. Play k
// uses seed splitmix64(seed + k).
ConeEstimate monte_carlo_cone(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta,
                              const PrefixG& rho, std::size_t samples, std::uint64_t seed);

// Same sampling scheme for an event decided by the true prefix of `depth`
// steps.
ConeEstimate monte_carlo_event(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta,
                               const std::function<bool(const PrefixG&)>& event, int depth, std::size_t samples,
                               std::uint64_t seed);

}  // namespace ug

namespace ug {
const char* shape_name(StrategyShape s);
std::optional<StrategyShape> parse_shape(const std::string& s);  // general|current|blind
}  // namespace ug
