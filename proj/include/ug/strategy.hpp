#pragma once

#include <unordered_map>
#include <vector>

#include "ug/distribution.hpp"
#include "ug/prefix.hpp"

namespace ug {

enum class Player2Variant { Ordinary, AllPowerful };

// Player-1 strategy as a finite table from observed prefixes to
// distributions over inputs. A table of depth D answers prefixes with fewer
// than D steps, which is exactly what cones of up to D steps consult.
struct StrategyG1 {
  int depth = 0;
  std::unordered_map<PrefixG, Dist, PrefixGHash> table;

  // Throws DomainError when the prefix is too deep or absent.
  const Dist& at(const PrefixG& observed) const;
  void set(const PrefixG& observed, Dist d) { table[observed] = std::move(d); }
};

// Player-2 strategy. Ordinary entries are keyed by (true prefix, input);
// all-powerful entries by (true prefix, observed prefix, input).
struct StrategyG2 {
  Player2Variant variant = Player2Variant::Ordinary;
  int depth = 0;
  std::unordered_map<std::vector<int>, Dist, IntSeqHash> table;

  static std::vector<int> key(const PrefixG& truth, int input);
  static std::vector<int> key(const PrefixG& truth, const PrefixG& observed, int input);

  const Dist& at(const PrefixG& truth, int input) const;
  const Dist& at(const PrefixG& truth, const PrefixG& observed, int input) const;
  void set(const PrefixG& truth, int input, Dist d) { table[key(truth, input)] = std::move(d); }
  void set(const PrefixG& truth, const PrefixG& observed, int input, Dist d) {
    table[key(truth, observed, input)] = std::move(d);
  }
};

}  // namespace ug
