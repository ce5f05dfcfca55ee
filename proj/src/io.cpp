#include "ug/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ug/errors.hpp"

namespace ug::io {

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key '") + key + "'");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string str(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

int integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<std::string> names(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  std::size_t k = 0;
  for (const auto& x : array(j, path)) out.push_back(str(x, path + "[" + std::to_string(k++) + "]"));
  return out;
}

Rational prob(const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return parse_rational(str(j, path));
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

// Name lookup that parks unknown names in `unresolved` with ids past the end.
struct Resolver {
  const std::vector<std::string>& known;
  std::vector<std::string>& unresolved;
  int operator()(const std::string& n) {
    auto it = std::find(known.begin(), known.end(), n);
    if (it != known.end()) return static_cast<int>(it - known.begin());
    auto u = std::find(unresolved.begin(), unresolved.end(), n);
    if (u == unresolved.end()) u = unresolved.insert(unresolved.end(), n);
    return static_cast<int>(known.size() + (u - unresolved.begin()));
  }
};

int known_id(const std::vector<std::string>& v, const Json& j, const std::string& path, const char* what) {
  const std::string n = str(j, path);
  auto it = std::find(v.begin(), v.end(), n);
  if (it == v.end()) fail(path, std::string("unknown ") + what + " '" + n + "'");
  return static_cast<int>(it - v.begin());
}

// Weights of repeated targets are added up; validation sees the total.
Dist dist_from(const Json& j, const std::string& path, const char* key, const std::function<int(const std::string&)>& id) {
  std::map<int, Rational> w;
  std::size_t k = 0;
  for (const auto& e : array(j, path)) {
    const std::string p = path + "[" + std::to_string(k++) + "]";
    const int x = id(str(field(e, key, p), p + "." + key));
    w[x] += prob(field(e, "prob", p), p + ".prob");
  }
  return Dist(w);
}

Json dist_to(const Dist& d, const char* key, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& [x, p] : d) out.push_back({{key, names.at(x)}, {"prob", to_string(p)}});
  return out;
}

Objective objective_from(const Json& j, const std::vector<std::string>& names, const std::string& path) {
  Objective o;
  const std::string kind = str(field(j, "kind", path), path + ".kind");
  auto k = parse_objective_kind(kind);
  if (!k) fail(path + ".kind", "unknown objective kind '" + kind + "'");
  o.kind = *k;
  const int n = static_cast<int>(names.size());
  if (o.kind == ObjectiveKind::Parity) {
    const Json& pr = field(j, "priorities", path);
    if (!pr.is_object()) fail(path + ".priorities", "expected an object from names to priorities");
    o.priority.assign(n, -1);
    for (const auto& [name, v] : pr.items()) {
      const std::string p = path + ".priorities." + name;
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) fail(p, "unknown name '" + name + "'");
      o.priority[it - names.begin()] = integer(v, p);
    }
    // A priority function that misses a name is a validation failure.
    if (std::find(o.priority.begin(), o.priority.end(), -1) != o.priority.end()) o.priority.clear();
  } else {
    o.target.assign(n, false);
    const Json& t = field(j, "target", path);
    std::size_t k2 = 0;
    for (const auto& x : array(t, path + ".target")) {
      const std::string p = path + ".target[" + std::to_string(k2++) + "]";
      o.target[known_id(names, x, p, "name")] = true;
    }
  }
  return o;
}

}  // namespace

Json objective_to_json(const Objective& o, const std::vector<std::string>& names) {
  Json j;
  j["kind"] = objective_name(o.kind);
  if (o.kind == ObjectiveKind::Parity) {
    Json pr = Json::object();
    for (std::size_t s = 0; s < o.priority.size(); ++s) pr[names[s]] = o.priority[s];
    j["priorities"] = pr;
  } else {
    Json t = Json::array();
    for (std::size_t s = 0; s < o.target.size(); ++s) {
      if (o.target[s]) t.push_back(names[s]);
    }
    j["target"] = t;
  }
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    const auto pos = msg.find("syntax error");
    throw ParseError(line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                     (pos == std::string::npos ? msg : msg.substr(pos)));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------- games

UncertaintyGame game_from_json(const Json& j) {
  UncertaintyGame g;
  g.locations = names(field(j, "locations", "$"), "$.locations");
  g.inputs = names(field(j, "inputs", "$"), "$.inputs");
  g.outputs = names(field(j, "outputs", "$"), "$.outputs");
  g.resize_tables();
  Resolver loc{g.locations, g.unresolved};
  g.initial = loc(str(field(j, "initial", "$"), "$.initial"));

  std::size_t k = 0;
  for (const auto& row : array(field(j, "delta", "$"), "$.delta")) {
    const std::string p = "$.delta[" + std::to_string(k++) + "]";
    const int l = known_id(g.locations, field(row, "from", p), p + ".from", "location");
    const int i = known_id(g.inputs, field(row, "in", p), p + ".in", "input");
    const int o = known_id(g.outputs, field(row, "out", p), p + ".out", "output");
    if (!g.Delta(l, i, o).empty()) fail(p, "duplicate transition row");
    g.delta[g.delta_index(l, i, o)] = dist_from(field(row, "to", p), p + ".to", "loc", loc);
  }
  k = 0;
  for (const auto& row : array(field(j, "un", "$"), "$.un")) {
    const std::string p = "$.un[" + std::to_string(k++) + "]";
    const int l = known_id(g.locations, field(row, "from", p), p + ".from", "location");
    if (!g.un[l].empty()) fail(p, "duplicate uncertainty row");
    g.un[l] = dist_from(field(row, "to", p), p + ".to", "loc", loc);
  }
  if (j.contains("objective") && !j["objective"].is_null()) {
    g.objective = objective_from(j["objective"], g.locations, "$.objective");
  }
  return g;
}

Json game_to_json(const UncertaintyGame& g) {
  Json j;
  j["locations"] = g.locations;
  j["inputs"] = g.inputs;
  j["outputs"] = g.outputs;
  j["initial"] = g.locations.at(g.initial);
  Json delta = Json::array();
  for (int l = 0; l < g.num_locations(); ++l) {
    for (int i = 0; i < g.num_inputs(); ++i) {
      for (int o = 0; o < g.num_outputs(); ++o) {
        delta.push_back({{"from", g.locations[l]},
                         {"in", g.inputs[i]},
                         {"out", g.outputs[o]},
                         {"to", dist_to(g.Delta(l, i, o), "loc", g.locations)}});
      }
    }
  }
  j["delta"] = delta;
  Json un = Json::array();
  for (int l = 0; l < g.num_locations(); ++l) {
    un.push_back({{"from", g.locations[l]}, {"to", dist_to(g.un[l], "loc", g.locations)}});
  }
  j["un"] = un;
  if (g.objective) j["objective"] = objective_to_json(*g.objective, g.locations);
  return j;
}

// ---------------------------------------------------------------- POGs

PogFile pog_from_json(const Json& j) {
  PogFile f;
  PartialObsGame& h = f.pog;
  std::size_t k = 0;
  for (const auto& s : array(field(j, "states", "$"), "$.states")) {
    const std::string p = "$.states[" + std::to_string(k++) + "]";
    h.states.push_back(str(field(s, "name", p), p + ".name"));
    h.owner.push_back(integer(field(s, "owner", p), p + ".owner"));
  }
  h.actions1 = names(field(j, "actions1", "$"), "$.actions1");
  h.actions2 = names(field(j, "actions2", "$"), "$.actions2");
  h.delta.resize(h.states.size());
  for (int s = 0; s < h.num_states(); ++s) h.delta[s].resize(h.owner[s] == 2 ? h.actions2.size() : h.actions1.size());
  Resolver st{h.states, h.unresolved};
  k = 0;
  for (const auto& row : array(field(j, "delta", "$"), "$.delta")) {
    const std::string p = "$.delta[" + std::to_string(k++) + "]";
    const int s = known_id(h.states, field(row, "from", p), p + ".from", "state");
    const int a = known_id(h.actions_of(h.owner[s] == 2 ? 2 : 1), field(row, "action", p), p + ".action", "action");
    if (!h.delta[s][a].empty()) fail(p, "duplicate transition row");
    h.delta[s][a] = dist_from(field(row, "to", p), p + ".to", "state", st);
  }
  for (int player : {1, 2}) {
    const std::string key = player == 1 ? "obs1" : "obs2";
    auto& blocks = player == 1 ? h.obs1_blocks : h.obs2_blocks;
    k = 0;
    for (const auto& b : array(field(j, key.c_str(), "$"), "$." + key)) {
      const std::string p = "$." + key + "[" + std::to_string(k++) + "]";
      std::vector<int> block;
      for (const auto& n : names(b, p)) block.push_back(st(n));
      blocks.push_back(block);
    }
  }
  h.initial = dist_from(field(j, "initial", "$"), "$.initial", "state", st);
  h.index_observations();
  if (j.contains("objective") && !j["objective"].is_null()) {
    f.objective = objective_from(j["objective"], h.states, "$.objective");
  }
  return f;
}

Json pog_to_json(const PartialObsGame& h, const std::optional<Objective>& objective) {
  Json j;
  Json states = Json::array();
  for (int s = 0; s < h.num_states(); ++s) states.push_back({{"name", h.states[s]}, {"owner", h.owner[s]}});
  j["states"] = states;
  j["actions1"] = h.actions1;
  j["actions2"] = h.actions2;
  Json delta = Json::array();
  for (int s = 0; s < h.num_states(); ++s) {
    const auto& acts = h.actions_of(h.owner[s]);
    for (std::size_t a = 0; a < h.delta[s].size(); ++a) {
      delta.push_back({{"from", h.states[s]}, {"action", acts[a]}, {"to", dist_to(h.delta[s][a], "state", h.states)}});
    }
  }
  j["delta"] = delta;
  for (int player : {1, 2}) {
    Json blocks = Json::array();
    for (const auto& b : h.blocks(player)) {
      Json names_json = Json::array();
      for (int s : b) names_json.push_back(h.states.at(s));
      blocks.push_back(names_json);
    }
    j[player == 1 ? "obs1" : "obs2"] = blocks;
  }
  j["initial"] = dist_to(h.initial, "state", h.states);
  if (objective) j["objective"] = objective_to_json(*objective, h.states);
  return j;
}

Json reduced_to_json(const ReducedGame& r, const UncertaintyGame& g) {
  std::optional<Objective> obj;
  if (g.objective) {
    obj = Objective{g.objective->kind, r.target, r.priority};
  }
  Json j = pog_to_json(r.pog, obj);
  j["mode"] = r.mode == ReductionMode::AllPowerful ? "all-powerful" : "standard";
  Json prov = Json::array();
  for (int s = 0; s < r.pog.num_states(); ++s) {
    Json e = {{"state", r.pog.states[s]}, {"first", g.locations[r.first(s)]}, {"second", g.locations[r.second(s)]}};
    if (!r.is_player1_state(s)) e["input"] = g.inputs[r.letter(s)];
    prov.push_back(e);
  }
  j["provenance"] = prov;
  return j;
}

// ---------------------------------------------------------------- POMDPs

Pomdp pomdp_from_json(const Json& j) {
  Pomdp m;
  m.states = names(field(j, "states", "$"), "$.states");
  m.actions = names(field(j, "actions", "$"), "$.actions");
  m.delta.assign(m.states.size(), std::vector<Dist>(m.actions.size()));
  Resolver st{m.states, m.unresolved};
  std::size_t k = 0;
  for (const auto& row : array(field(j, "delta", "$"), "$.delta")) {
    const std::string p = "$.delta[" + std::to_string(k++) + "]";
    const int s = known_id(m.states, field(row, "from", p), p + ".from", "state");
    const int a = known_id(m.actions, field(row, "action", p), p + ".action", "action");
    if (!m.delta[s][a].empty()) fail(p, "duplicate transition row");
    m.delta[s][a] = dist_from(field(row, "to", p), p + ".to", "state", st);
  }
  k = 0;
  for (const auto& b : array(field(j, "observations", "$"), "$.observations")) {
    const std::string p = "$.observations[" + std::to_string(k++) + "]";
    std::vector<int> block;
    for (const auto& n : names(b, p)) block.push_back(st(n));
    m.blocks.push_back(block);
  }
  m.initial = st(str(field(j, "initial", "$"), "$.initial"));
  m.index_observations();
  if (j.contains("objective") && !j["objective"].is_null()) {
    m.objective = objective_from(j["objective"], m.states, "$.objective");
  }
  return m;
}

Json pomdp_to_json(const Pomdp& m) {
  Json j;
  j["states"] = m.states;
  j["actions"] = m.actions;
  Json delta = Json::array();
  for (int s = 0; s < m.num_states(); ++s) {
    for (int a = 0; a < m.num_actions(); ++a) {
      delta.push_back({{"from", m.states[s]}, {"action", m.actions[a]}, {"to", dist_to(m.delta[s][a], "state", m.states)}});
    }
  }
  j["delta"] = delta;
  Json blocks = Json::array();
  for (const auto& b : m.blocks) {
    Json names_json = Json::array();
    for (int s : b) names_json.push_back(m.states.at(s));
    blocks.push_back(names_json);
  }
  j["observations"] = blocks;
  j["initial"] = m.states.at(m.initial);
  if (m.objective) j["objective"] = objective_to_json(*m.objective, m.states);
  return j;
}

// ---------------------------------------------------------------- strategies

namespace {

PrefixG prefix_from(const UncertaintyGame& g, const Json& j, const std::string& path) {
  try {
    return parse_prefix(g, names(j, path));
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

Json prefix_to(const UncertaintyGame& g, const PrefixG& p) { return prefix_names(g, p); }

}  // namespace

StrategyFile strategy_from_json(const UncertaintyGame& g, const Json& j) {
  StrategyFile f;
  f.player = integer(field(j, "player", "$"), "$.player");
  if (f.player != 1 && f.player != 2) fail("$.player", "must be 1 or 2");
  const int depth = integer(field(j, "depth", "$"), "$.depth");
  if (depth < 0) fail("$.depth", "must be nonnegative");
  f.alpha.depth = f.beta.depth = depth;
  if (f.player == 2) {
    const std::string v = j.contains("variant") ? str(j["variant"], "$.variant") : "ordinary";
    if (v == "ordinary") {
      f.beta.variant = Player2Variant::Ordinary;
    } else if (v == "all-powerful") {
      f.beta.variant = Player2Variant::AllPowerful;
    } else {
      fail("$.variant", "expected ordinary or all-powerful");
    }
  }
  const auto& acts = f.player == 1 ? g.inputs : g.outputs;
  std::size_t k = 0;
  for (const auto& row : array(field(j, "rows", "$"), "$.rows")) {
    const std::string p = "$.rows[" + std::to_string(k++) + "]";
    const PrefixG pre = prefix_from(g, field(row, "prefix", p), p + ".prefix");
    Dist d = dist_from(field(row, "dist", p), p + ".dist", "action", [&](const std::string& n) {
      auto it = std::find(acts.begin(), acts.end(), n);
      if (it == acts.end()) fail(p + ".dist", "unknown action '" + n + "'");
      return static_cast<int>(it - acts.begin());
    });
    if (!d.is_distribution()) fail(p + ".dist", "not a probability distribution");
    if (f.player == 1) {
      f.alpha.set(pre, std::move(d));
      continue;
    }
    const int input = known_id(g.inputs, field(row, "input", p), p + ".input", "input");
    if (f.beta.variant == Player2Variant::Ordinary) {
      f.beta.set(pre, input, std::move(d));
    } else {
      const PrefixG obs = prefix_from(g, field(row, "observed_prefix", p), p + ".observed_prefix");
      if (!action_matching(pre, obs)) fail(p + ".observed_prefix", "not action-matching with prefix");
      f.beta.set(pre, obs, input, std::move(d));
    }
  }
  return f;
}

Json strategy_to_json(const UncertaintyGame& g, const StrategyG1& s) {
  Json j;
  j["depth"] = s.depth;
  j["player"] = 1;
  std::map<PrefixG, const Dist*> sorted;
  for (const auto& [p, d] : s.table) sorted[p] = &d;
  Json rows = Json::array();
  for (const auto& [p, d] : sorted) rows.push_back({{"prefix", prefix_to(g, p)}, {"dist", dist_to(*d, "action", g.inputs)}});
  j["rows"] = rows;
  return j;
}

Json strategy_to_json(const UncertaintyGame& g, const StrategyG2& s) {
  Json j;
  j["depth"] = s.depth;
  j["player"] = 2;
  const bool ap = s.variant == Player2Variant::AllPowerful;
  j["variant"] = ap ? "all-powerful" : "ordinary";
  std::map<std::vector<int>, const Dist*> sorted;
  for (const auto& [k, d] : s.table) sorted[k] = &d;
  Json rows = Json::array();
  for (const auto& [k, d] : sorted) {
    const std::size_t len = ap ? (k.size() - 1) / 2 : k.size() - 1;
    Json row;
    row["prefix"] = prefix_to(g, PrefixG(std::vector<int>(k.begin(), k.begin() + len)));
    if (ap) row["observed_prefix"] = prefix_to(g, PrefixG(std::vector<int>(k.begin() + len, k.end() - 1)));
    row["input"] = g.inputs.at(k.back());
    row["dist"] = dist_to(*d, "action", g.outputs);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

// ---------------------------------------------------------------- witnesses

Json witness_to_json(const PartialObsGame& h, const WinningRegion& r) {
  auto set_names = [&](const std::vector<int>& set) {
    Json out = Json::array();
    for (int s : set) out.push_back(h.states.at(s));
    return out;
  };
  Json j;
  j["mode"] = win_mode_name(r.mode);
  j["objective"] = objective_name(r.objective);
  j["initial_winning"] = r.initial_winning;
  Json win = Json::array();
  for (const auto& set : r.winning) win.push_back(set_names(set));
  j["winning"] = win;
  Json rows = Json::array();
  for (const auto& w : r.witness) {
    Json acts = Json::array();
    for (int a : w.actions) acts.push_back(h.actions1.at(a));
    Json row = {{"knowledge", set_names(w.knowledge)}};
    if (!w.memory.empty()) row["memory"] = w.memory;
    row["actions"] = acts;
    rows.push_back(row);
  }
  j["strategy"] = rows;
  if (!r.action_word.empty()) {
    Json word = Json::array();
    for (int a : r.action_word) word.push_back(h.actions1.at(a));
    j["action_word"] = word;
  }
  j["explored"] = r.explored;
  return j;
}

}  // namespace ug::io
