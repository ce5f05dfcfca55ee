#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ug/game.hpp"
#include "ug/pog.hpp"
#include "ug/reduce_forward.hpp"
#include "ug/solvers.hpp"
#include "ug/strategy.hpp"

namespace ug::io {

// Insertion-ordered so emitted files read in the documented key order.
using Json = nlohmann::ordered_json;

// Throws ParseError naming line and column for malformed JSON, or the path
// for an unreadable file.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// Structural problems (missing keys, wrong types, unknown letters) raise
// ParseError with the JSON path of the offending field. Unknown location or
// state names inside distributions and blocks are kept as unresolved so that
// validation can report them.
UncertaintyGame game_from_json(const Json& j);
Json game_to_json(const UncertaintyGame& g);

struct PogFile {
  PartialObsGame pog;
  std::optional<Objective> objective;  // indexed by state
};
PogFile pog_from_json(const Json& j);
Json pog_to_json(const PartialObsGame& h, const std::optional<Objective>& objective = std::nullopt);
// Adds the objective lifted to H and a provenance block mapping every state
// to its location pair (and pending input).
Json reduced_to_json(const ReducedGame& r, const UncertaintyGame& g);

Pomdp pomdp_from_json(const Json& j);
Json pomdp_to_json(const Pomdp& m);

struct StrategyFile {
  int player = 1;
  StrategyG1 alpha;
  StrategyG2 beta;
};
StrategyFile strategy_from_json(const UncertaintyGame& g, const Json& j);
Json strategy_to_json(const UncertaintyGame& g, const StrategyG1& s);
Json strategy_to_json(const UncertaintyGame& g, const StrategyG2& s);

Json objective_to_json(const Objective& o, const std::vector<std::string>& names);

Json witness_to_json(const PartialObsGame& h, const WinningRegion& r);

}  // namespace ug::io
