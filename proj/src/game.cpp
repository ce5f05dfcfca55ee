#include "ug/game.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ug/errors.hpp"
#include "ug/prefix.hpp"
#include "ug/strategy.hpp"

namespace ug {

// ---------------------------------------------------------------- Dist

Dist::Dist(const std::map<int, Rational>& weights) {
  for (const auto& [x, w] : weights) {
    if (w != 0) entries_.emplace_back(x, w);
  }
}

Dist Dist::dirac(int x) { return Dist(std::map<int, Rational>{{x, Rational(1)}}); }

Dist Dist::uniform(const std::vector<int>& support) {
  std::map<int, Rational> w;
  const Rational p(1, static_cast<unsigned long>(support.size()));
  for (int x : support) w[x] += p;
  return Dist(w);
}

Rational Dist::operator()(int x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const auto& e, int key) { return e.first < key; });
  if (it != entries_.end() && it->first == x) return it->second;
  return Rational(0);
}

Rational Dist::total() const {
  Rational s(0);
  for (const auto& e : entries_) s += e.second;
  return s;
}

bool Dist::is_distribution() const {
  for (const auto& e : entries_) {
    if (e.second < 0 || e.second > 1) return false;
  }
  return total() == 1;
}

std::vector<int> Dist::support() const {
  std::vector<int> s;
  for (const auto& e : entries_) {
    if (e.second > 0) s.push_back(e.first);
  }
  return s;
}

// ---------------------------------------------------------------- objectives

const char* objective_name(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::Reach: return "reach";
    case ObjectiveKind::Safe: return "safe";
    case ObjectiveKind::Buchi: return "buchi";
    case ObjectiveKind::CoBuchi: return "cobuchi";
    case ObjectiveKind::Parity: return "parity";
  }
  return "?";
}

std::optional<ObjectiveKind> parse_objective_kind(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (c != '-' && c != '_') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s == "reach" || s == "reachability") return ObjectiveKind::Reach;
  if (s == "safe" || s == "safety") return ObjectiveKind::Safe;
  if (s == "buchi") return ObjectiveKind::Buchi;
  if (s == "cobuchi") return ObjectiveKind::CoBuchi;
  if (s == "parity") return ObjectiveKind::Parity;
  return std::nullopt;
}

std::vector<int> compile_priorities(const Objective& obj) {
  std::vector<int> p;
  switch (obj.kind) {
    case ObjectiveKind::Parity:
      return obj.priority;
    case ObjectiveKind::Buchi:
    case ObjectiveKind::Reach:
      for (bool t : obj.target) p.push_back(t ? 0 : 1);
      return p;
    case ObjectiveKind::CoBuchi:
      for (bool t : obj.target) p.push_back(t ? 2 : 1);
      return p;
    case ObjectiveKind::Safe:
      for (bool t : obj.target) p.push_back(t ? 0 : 1);
      return p;
  }
  return p;
}

bool eval_parity_on_lasso(const std::vector<int>& priority, const std::vector<int>& /*stem*/,
                          const std::vector<int>& cycle) {
  if (cycle.empty()) throw DomainError("lasso cycle must be nonempty");
  int lo = priority.at(cycle.front());
  for (int l : cycle) lo = std::min(lo, priority.at(l));
  return lo % 2 == 0;
}

bool eval_objective_on_lasso(const Objective& obj, const std::vector<int>& stem, const std::vector<int>& cycle) {
  if (cycle.empty()) throw DomainError("lasso cycle must be nonempty");
  if (obj.kind != ObjectiveKind::Reach && obj.kind != ObjectiveKind::Safe) {
    return eval_parity_on_lasso(compile_priorities(obj), stem, cycle);
  }
  // One-bit monitor: for Reach the bit records "target seen" and priority 0
  // marks it; for Safe it records "left the safe set" and priority 1 marks it.
  // After one pass over stem and cycle the bit is constant on the cycle.
  const bool reach = obj.kind == ObjectiveKind::Reach;
  bool bit = false;
  auto step = [&](int l) {
    const bool in_t = obj.target.at(l);
    if (reach ? in_t : !in_t) bit = true;
  };
  for (int l : stem) step(l);
  for (int l : cycle) step(l);
  int lo = 2;
  for (int l : cycle) {
    step(l);
    const int p = reach ? (bit ? 0 : 1) : (bit ? 1 : 0);
    lo = std::min(lo, p);
  }
  return lo % 2 == 0;
}

// ---------------------------------------------------------------- games

void UncertaintyGame::resize_tables() {
  delta.assign(locations.size() * inputs.size() * outputs.size(), Dist());
  un.assign(locations.size(), Dist());
}

namespace {

int index_of(const std::vector<std::string>& names, const std::string& n) {
  auto it = std::find(names.begin(), names.end(), n);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

void check_duplicates(const std::vector<std::string>& names, const char* what, ValidationReport& r) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) r.push_back(std::string("duplicate ") + what + " name '" + n + "'");
  }
}

}  // namespace

int UncertaintyGame::location_id(const std::string& n) const { return index_of(locations, n); }
int UncertaintyGame::input_id(const std::string& n) const { return index_of(inputs, n); }
int UncertaintyGame::output_id(const std::string& n) const { return index_of(outputs, n); }

namespace {

void check_row(const UncertaintyGame& g, const Dist& d, const std::string& where, ValidationReport& r) {
  if (d.empty()) {
    r.push_back("missing row " + where);
    return;
  }
  for (const auto& [x, w] : d) {
    if (x < 0 || x >= g.num_locations()) {
      const int k = x - g.num_locations();
      const std::string name =
          (k >= 0 && k < static_cast<int>(g.unresolved.size())) ? g.unresolved[k] : std::to_string(x);
      r.push_back("dangling location '" + name + "' in " + where);
    }
    if (w < 0 || w > 1) r.push_back("probability " + to_string(w) + " outside [0,1] in " + where);
  }
  const Rational s = d.total();
  if (s != 1) r.push_back("distribution sum " + to_string(s) + " != 1 in " + where);
}

}  // namespace

ValidationReport validate_game(const UncertaintyGame& g) {
  ValidationReport r;
  if (g.locations.empty()) r.push_back("no locations");
  if (g.inputs.empty()) r.push_back("empty input alphabet");
  if (g.outputs.empty()) r.push_back("empty output alphabet");
  check_duplicates(g.locations, "location", r);
  check_duplicates(g.inputs, "input", r);
  check_duplicates(g.outputs, "output", r);
  if (g.initial < 0 || g.initial >= g.num_locations()) r.push_back("initial location is not a location");
  if (g.delta.size() != g.locations.size() * g.inputs.size() * g.outputs.size()) {
    r.push_back("transition table has wrong size");
  } else {
    for (int l = 0; l < g.num_locations(); ++l) {
      for (int i = 0; i < g.num_inputs(); ++i) {
        for (int o = 0; o < g.num_outputs(); ++o) {
          check_row(g, g.Delta(l, i, o),
                    "delta(" + g.locations[l] + "," + g.inputs[i] + "," + g.outputs[o] + ")", r);
        }
      }
    }
  }
  if (g.un.size() != g.locations.size()) {
    r.push_back("uncertainty table has wrong size");
  } else {
    for (int l = 0; l < g.num_locations(); ++l) check_row(g, g.un[l], "un(" + g.locations[l] + ")", r);
  }
  for (const auto& n : g.unresolved) {
    bool reported = false;
    for (const auto& msg : r) reported = reported || msg.find("'" + n + "'") != std::string::npos;
    if (!reported) r.push_back("dangling location '" + n + "'");
  }
  if (g.objective) {
    const auto& o = *g.objective;
    if (o.kind == ObjectiveKind::Parity) {
      if (o.priority.size() != g.locations.size()) r.push_back("priority function is not total on locations");
      for (int p : o.priority) {
        if (p < 0) r.push_back("negative priority");
      }
    } else if (o.target.size() != g.locations.size()) {
      r.push_back("target set does not match the location set");
    }
  }
  return r;
}

const Dist& transition_dist(const UncertaintyGame& g, int l, int i, int o) {
  if (l < 0 || l >= g.num_locations()) throw DomainError("unknown location id " + std::to_string(l));
  if (i < 0 || i >= g.num_inputs()) throw DomainError("unknown input letter id " + std::to_string(i));
  if (o < 0 || o >= g.num_outputs()) throw DomainError("unknown output letter id " + std::to_string(o));
  return g.Delta(l, i, o);
}

// ---------------------------------------------------------------- prefixes

bool action_matching(const PrefixG& a, const PrefixG& b) {
  if (a.seq.size() != b.seq.size()) return false;
  for (std::size_t k = 1; k < a.seq.size(); k += 3) {
    if (a.seq[k] != b.seq[k] || a.seq[k + 1] != b.seq[k + 1]) return false;
  }
  return true;
}

std::vector<std::string> prefix_names(const UncertaintyGame& g, const PrefixG& p) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < p.seq.size(); ++k) {
    const int x = p.seq[k];
    switch (k % 3) {
      case 0: out.push_back(g.locations.at(x)); break;
      case 1: out.push_back(g.inputs.at(x)); break;
      default: out.push_back(g.outputs.at(x)); break;
    }
  }
  return out;
}

std::string format_prefix(const UncertaintyGame& g, const PrefixG& p) {
  std::string s;
  for (const auto& n : prefix_names(g, p)) {
    if (!s.empty()) s += ' ';
    s += n;
  }
  return s;
}

PrefixG parse_prefix(const UncertaintyGame& g, const std::vector<std::string>& names) {
  if (names.empty() || names.size() % 3 != 1) {
    throw DomainError("prefix must alternate location, input, output and end in a location");
  }
  PrefixG p;
  for (std::size_t k = 0; k < names.size(); ++k) {
    int id = -1;
    const char* what = "location";
    switch (k % 3) {
      case 0: id = g.location_id(names[k]); break;
      case 1: id = g.input_id(names[k]); what = "input"; break;
      default: id = g.output_id(names[k]); what = "output"; break;
    }
    if (id < 0) throw DomainError(std::string("unknown ") + what + " '" + names[k] + "' in prefix");
    p.seq.push_back(id);
  }
  return p;
}

PrefixG parse_prefix(const UncertaintyGame& g, const std::string& space_separated) {
  std::istringstream in(space_separated);
  std::vector<std::string> names;
  for (std::string w; in >> w;) names.push_back(w);
  return parse_prefix(g, names);
}

// ---------------------------------------------------------------- strategies

const Dist& StrategyG1::at(const PrefixG& observed) const {
  if (observed.steps() >= depth) {
    throw DomainError("Player-1 strategy of depth " + std::to_string(depth) + " queried at a prefix with " +
                      std::to_string(observed.steps()) + " steps");
  }
  auto it = table.find(observed);
  if (it == table.end()) throw DomainError("Player-1 strategy undefined at queried prefix");
  return it->second;
}

std::vector<int> StrategyG2::key(const PrefixG& truth, int input) {
  std::vector<int> k = truth.seq;
  k.push_back(input);
  return k;
}

std::vector<int> StrategyG2::key(const PrefixG& truth, const PrefixG& observed, int input) {
  std::vector<int> k = truth.seq;
  k.insert(k.end(), observed.seq.begin(), observed.seq.end());
  k.push_back(input);
  return k;
}

const Dist& StrategyG2::at(const PrefixG& truth, int input) const {
  if (variant != Player2Variant::Ordinary) throw DomainError("all-powerful strategy queried without observed prefix");
  if (truth.steps() >= depth) throw DomainError("Player-2 strategy queried beyond its depth");
  auto it = table.find(key(truth, input));
  if (it == table.end()) throw DomainError("Player-2 strategy undefined at queried prefix");
  return it->second;
}

const Dist& StrategyG2::at(const PrefixG& truth, const PrefixG& observed, int input) const {
  if (variant != Player2Variant::AllPowerful) throw DomainError("ordinary strategy queried with observed prefix");
  if (truth.steps() >= depth) throw DomainError("Player-2 strategy queried beyond its depth");
  auto it = table.find(key(truth, observed, input));
  if (it == table.end()) throw DomainError("Player-2 strategy undefined at queried prefix pair");
  return it->second;
}

}  // namespace ug
