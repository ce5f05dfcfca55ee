#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ug/distribution.hpp"

namespace ug {

enum class ObjectiveKind { Reach, Safe, Buchi, CoBuchi, Parity };

const char* objective_name(ObjectiveKind k);
// Accepts reach|reachability, safe|safety, buchi, cobuchi, parity.
std::optional<ObjectiveKind> parse_objective_kind(const std::string& s);

struct Objective {
  ObjectiveKind kind = ObjectiveKind::Reach;
  std::vector<bool> target;    // indexed by location, used by the four set kinds
  std::vector<int> priority;   // indexed by location, used by Parity
};

// Priority function that realises a set objective as a two-priority parity
// condition: Buchi -> {0 on T, 1 elsewhere}; coBuchi -> {2 on T, 1 elsewhere}.
// Reach and Safe are not prefix independent, so they are compiled together
// with a one-bit monitor; see eval_objective_on_lasso.
std::vector<int> compile_priorities(const Objective& obj);

// True iff the minimum priority over the cycle locations is even.
// Throws DomainError for an empty cycle.
bool eval_parity_on_lasso(const std::vector<int>& priority, const std::vector<int>& stem,
                          const std::vector<int>& cycle);

// Evaluates any objective on the lasso stem.cycle^omega through priorities.
bool eval_objective_on_lasso(const Objective& obj, const std::vector<int>& stem,
                             const std::vector<int>& cycle);

struct UncertaintyGame {
  std::vector<std::string> locations;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  // Names referenced by the input file but missing from `locations`. Ids
  // locations.size() + k refer to unresolved[k]; validation flags them.
  std::vector<std::string> unresolved;
  int initial = 0;
  // delta[(l * |inputs| + i) * |outputs| + o]; an empty Dist means missing.
  std::vector<Dist> delta;
  std::vector<Dist> un;
  std::optional<Objective> objective;

  int num_locations() const { return static_cast<int>(locations.size()); }
  int num_inputs() const { return static_cast<int>(inputs.size()); }
  int num_outputs() const { return static_cast<int>(outputs.size()); }
  std::size_t delta_index(int l, int i, int o) const {
    return (static_cast<std::size_t>(l) * inputs.size() + i) * outputs.size() + o;
  }
  // Unchecked accessors for hot loops over validated games.
  const Dist& Delta(int l, int i, int o) const { return delta[delta_index(l, i, o)]; }
  const Dist& Un(int l) const { return un[l]; }

  // Allocates empty tables for the current alphabet sizes.
  void resize_tables();

  int location_id(const std::string& name) const;  // -1 if unknown
  int input_id(const std::string& name) const;
  int output_id(const std::string& name) const;
};

using ValidationReport = std::vector<std::string>;

ValidationReport validate_game(const UncertaintyGame& g);

// Delta(l, i, o); throws DomainError for ids outside the game.
const Dist& transition_dist(const UncertaintyGame& g, int l, int i, int o);

}  // namespace ug
