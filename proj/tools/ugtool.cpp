// Command-line front end. Exit codes: 0 success / winning, 1 losing or a
// lemma counterexample, 2 unsupported cell or refused enumeration,
// 64 malformed input, 65 semantic validation failure.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "ug/errors.hpp"
#include "ug/io.hpp"
#include "ug/measure.hpp"
#include "ug/reduce_forward.hpp"
#include "ug/reduce_pomdp.hpp"
#include "ug/solvers.hpp"
#include "ug/verify.hpp"

namespace {

using namespace ug;
using io::Json;

constexpr int kExitLose = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitMalformed = 64;
constexpr int kExitInvalid = 65;

void require_valid(const ValidationReport& r, const std::string& what) {
  if (!r.empty()) {
    std::vector<std::string> issues;
    for (const auto& s : r) issues.push_back(what + ": " + s);
    throw ValidationError(issues);
  }
}

UncertaintyGame load_game(const std::string& path) {
  UncertaintyGame g = io::game_from_json(io::read_json_file(path));
  require_valid(validate_game(g), path);
  return g;
}

Pomdp load_pomdp(const std::string& path) {
  Pomdp m = io::pomdp_from_json(io::read_json_file(path));
  require_valid(validate_pomdp(m), path);
  return m;
}

io::StrategyFile load_strategy(const UncertaintyGame& g, const std::string& path, int player) {
  io::StrategyFile f = io::strategy_from_json(g, io::read_json_file(path));
  if (f.player != player) {
    throw ValidationError({path + ": expected a Player-" + std::to_string(player) + " strategy"});
  }
  return f;
}

void emit(const Json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    io::write_json_file(out, j);
  }
}

std::optional<ReductionMode> parse_reduction_mode(const std::string& s) {
  if (s == "all-powerful") return ReductionMode::AllPowerful;
  if (s == "standard") return ReductionMode::Standard;
  return std::nullopt;
}

std::optional<WinMode> parse_win_mode(const std::string& s) {
  if (s == "sure") return WinMode::Sure;
  if (s == "almost") return WinMode::AlmostSure;
  if (s == "positive") return WinMode::Positive;
  return std::nullopt;
}

// The file supplies the target set (or priorities); the flag picks the kind.
Objective objective_for(const std::optional<Objective>& file, ObjectiveKind kind) {
  if (!file) throw ValidationError({"input has no objective"});
  Objective o = *file;
  const bool want_parity = kind == ObjectiveKind::Parity;
  const bool has_parity = o.kind == ObjectiveKind::Parity;
  if (want_parity != has_parity) {
    throw ValidationError({std::string("objective in file is ") + objective_name(o.kind) + ", cannot solve for " +
                           objective_name(kind)});
  }
  o.kind = kind;
  return o;
}

// ---------------------------------------------------------------- commands

struct Options {
  std::string in, out, a, b, prefix, mode = "all-powerful", objective, win_mode, player2 = "all-powerful", witness,
                                     lemma = "all", shape = "general", variant;
  bool pomdp = false;
  std::uint64_t seed = 0;
  int instances = 1, depth = 2, count = 1;
};

int cmd_reduce_forward(const Options& o) {
  const auto mode = parse_reduction_mode(o.mode);
  if (!mode) throw ParseError("--mode must be all-powerful or standard");
  const UncertaintyGame g = load_game(o.in);
  const ReducedGame r = reduce_game(g, g.objective, *mode);
  emit(io::reduced_to_json(r, g), o.out);
  return 0;
}

int cmd_reduce_pomdp(const Options& o) {
  const Pomdp m = load_pomdp(o.in);
  emit(io::game_to_json(reduce_pomdp(m).game), o.out);
  return 0;
}

int cmd_measure(const Options& o) {
  const UncertaintyGame g = load_game(o.in);
  const auto fa = load_strategy(g, o.a, 1);
  const auto fb = load_strategy(g, o.b, 2);
  PrefixG rho;
  try {
    rho = parse_prefix(g, o.prefix);
  } catch (const DomainError& e) {
    throw ParseError(std::string("--prefix: ") + e.what());
  }
  const Rational p = cone_prob(g, fa.alpha, fb.beta, rho);
  std::printf("%s (~%.6f)\n", to_string(p).c_str(), to_double(p));
  return 0;
}

int cmd_solve(const Options& o) {
  const auto kind = parse_objective_kind(o.objective);
  if (!kind) throw ParseError("--objective: unknown kind '" + o.objective + "'");
  const auto mode = parse_win_mode(o.win_mode);
  if (!mode) throw ParseError("--mode must be sure, almost or positive");
  const auto p2 = parse_reduction_mode(o.player2);
  if (!p2) throw ParseError("--player2 must be all-powerful or standard");

  SolveResult res;
  PartialObsGame h;
  if (o.in.empty()) {
    // Without an instance only the classification can be answered.
    const auto c = unsupported_classification(*kind, *mode, o.pomdp || *p2 == ReductionMode::AllPowerful);
    if (!c) throw ParseError("--in is required for a combination that has a solver");
    res.classification = *c;
  } else if (o.pomdp) {
    const Pomdp m = load_pomdp(o.in);
    res = solve_pomdp(m, objective_for(m.objective, *kind), *mode);
    if (res.supported) h = pomdp_as_game(m);
  } else {
    const UncertaintyGame g = load_game(o.in);
    const Objective obj = objective_for(g.objective, *kind);
    res = solve_uncertainty_game(g, obj, *mode, *p2);
    if (res.supported) h = reduce_game(g, obj, ReductionMode::AllPowerful).pog;
  }
  if (!res.supported) {
    std::cout << "Unsupported: " << res.classification << " (complexity classification)\n";
    return kExitUnsupported;
  }
  const WinningRegion& r = res.region;
  std::cout << win_mode_name(r.mode) << " " << objective_name(r.objective) << ": "
            << (r.initial_winning ? "winning" : "losing") << " (" << r.explored << " nodes explored)\n";
  if (!o.witness.empty()) io::write_json_file(o.witness, io::witness_to_json(h, r));
  return r.initial_winning ? 0 : kExitLose;
}

Json report_json(const LemmaReport& r) {
  Json j;
  j["lemma"] = lemma_name(r.kind);
  j["instance"] = r.instance;
  j["checked"] = r.checked;
  if (r.refusal) {
    j["status"] = "refused";
    j["reason"] = *r.refusal;
  } else if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["status"] = "counterexample";
    j["counterexample"] = {{"left", c.left},
                           {"right", c.right},
                           {"left_value", to_string(c.left_value)},
                           {"right_value", to_string(c.right_value)},
                           {"note", c.note}};
  } else {
    j["status"] = "verified";
  }
  return j;
}

int cmd_verify(const Options& o) {
  std::vector<LemmaKind> kinds;
  if (o.lemma == "all") {
    kinds = all_lemmas();
  } else if (auto k = parse_lemma_kind(o.lemma)) {
    kinds = {*k};
  } else {
    throw ParseError("--lemma: unknown kind '" + o.lemma + "'");
  }
  const auto shape = parse_shape(o.shape);
  if (!shape) throw ParseError("--shape must be general, current or blind");
  std::optional<Player2Variant> variant;
  if (o.variant == "ordinary") {
    variant = Player2Variant::Ordinary;
  } else if (o.variant == "all-powerful") {
    variant = Player2Variant::AllPowerful;
  } else if (!o.variant.empty()) {
    throw ParseError("--variant must be ordinary or all-powerful");
  }
  if (o.instances < 1 || o.depth < 0) throw ParseError("--instances must be positive and --depth nonnegative");

  Json entries = Json::array();
  Json summary = Json::object();
  bool any_failed = false, any_refused = false;
  for (LemmaKind k : kinds) {
    int verified = 0, failed = 0, refused = 0;
    for (int i = 0; i < o.instances; ++i) {
      const std::uint64_t s = splitmix64(o.seed * 1000003ull + static_cast<std::uint64_t>(i));
      LemmaReport rep;
      Json instance_file;
      if (is_pomdp_lemma(k)) {
        const PomdpInstance inst = random_pomdp_instance(s, *shape);
        rep = check_lemma(k, inst, o.depth);
        if (rep.counterexample) instance_file = io::pomdp_to_json(inst.pomdp);
      } else {
        const Player2Variant v = variant ? *variant : (i % 2 ? Player2Variant::AllPowerful : Player2Variant::Ordinary);
        const GameInstance inst = random_game_instance(s, o.depth, v, *shape);
        rep = check_lemma(k, inst, o.depth);
        if (rep.counterexample) {
          instance_file = {{"game", io::game_to_json(inst.game)},
                           {"alpha", io::strategy_to_json(inst.game, inst.alpha)},
                           {"beta", io::strategy_to_json(inst.game, inst.beta)}};
        }
      }
      Json e = report_json(rep);
      if (!instance_file.is_null()) e["instance_file"] = instance_file;
      entries.push_back(e);
      if (rep.refusal) {
        ++refused;
      } else if (rep.counterexample) {
        ++failed;
      } else {
        ++verified;
      }
    }
    summary[lemma_name(k)] = {{"verified", verified}, {"counterexample", failed}, {"refused", refused}};
    any_failed = any_failed || failed > 0;
    any_refused = any_refused || refused > 0;
  }
  Json report = {{"seed", o.seed}, {"instances", o.instances}, {"depth", o.depth}, {"shape", o.shape},
                 {"summary", summary}, {"entries", entries}};
  emit(report, o.out);
  return any_failed ? kExitLose : any_refused ? kExitUnsupported : 0;
}

int cmd_sample(const Options& o) {
  const UncertaintyGame g = load_game(o.in);
  const auto fa = load_strategy(g, o.a, 1);
  const auto fb = load_strategy(g, o.b, 2);
  if (o.depth < 0 || o.count < 1) throw ParseError("--depth must be nonnegative and --count positive");
  Json traces = Json::array();
  for (int k = 0; k < o.count; ++k) {
    const SampleTrace t = sample_play(g, fa.alpha, fb.beta, o.depth, o.seed + static_cast<std::uint64_t>(k));
    traces.push_back({{"seed", t.seed}, {"truth", prefix_names(g, t.truth)}, {"observed", prefix_names(g, t.observed)}});
  }
  emit(traces, o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Games with probabilistic uncertainty: measures, reductions, solvers and lemma checks.\n"
               "Exit codes: 0 ok/winning, 1 losing/counterexample, 2 unsupported/refused, 64 malformed input, "
               "65 validation failure. UG_MAX_ENUM overrides the enumeration bound of verify."};
  app.require_subcommand(1);
  Options o;

  auto* rf = app.add_subcommand("reduce-forward", "Reduce a game to a partial-observation game");
  rf->add_option("--mode", o.mode, "all-powerful or standard Player 2")->capture_default_str();
  rf->add_option("--in", o.in, "game file")->required();
  rf->add_option("--out", o.out, "output file (default stdout)");

  auto* rp = app.add_subcommand("reduce-pomdp", "Reduce a POMDP to a game with probabilistic uncertainty");
  rp->add_option("--in", o.in, "POMDP file")->required();
  rp->add_option("--out", o.out, "output file (default stdout)");

  auto* ms = app.add_subcommand("measure", "Exact probability of a cone");
  ms->add_option("--in", o.in, "game file")->required();
  ms->add_option("--a", o.a, "Player-1 strategy file")->required();
  ms->add_option("--b", o.b, "Player-2 strategy file")->required();
  ms->add_option("--prefix", o.prefix, "space-separated location/input/output names")->required();

  auto* sv = app.add_subcommand("solve", "Qualitative winning for Player 1");
  sv->add_option("--objective", o.objective, "reach, safe, buchi, cobuchi or parity")->required();
  sv->add_option("--mode", o.win_mode, "sure, almost or positive")->required();
  sv->add_option("--player2", o.player2, "all-powerful or standard")->capture_default_str();
  sv->add_option("--in", o.in, "game file (POMDP file with --pomdp)");
  sv->add_flag("--pomdp", o.pomdp, "read a POMDP instead of a game");
  sv->add_option("--witness", o.witness, "write the winning region and strategy here");

  auto* vf = app.add_subcommand("verify", "Exact lemma checks on seeded random instances");
  vf->add_option("--lemma", o.lemma, "all or one lemma kind")->capture_default_str();
  vf->add_option("--seed", o.seed, "base seed")->capture_default_str();
  vf->add_option("--instances", o.instances, "instances per lemma")->capture_default_str();
  vf->add_option("--depth", o.depth, "prefix depth")->capture_default_str();
  vf->add_option("--shape", o.shape, "strategy shape: general, current or blind")->capture_default_str();
  vf->add_option("--variant", o.variant, "Player-2 variant (default: alternate per instance)");
  vf->add_option("--out", o.out, "report file (default stdout)");

  auto* sp = app.add_subcommand("sample", "Sample plays with a seed");
  sp->add_option("--in", o.in, "game file")->required();
  sp->add_option("--a", o.a, "Player-1 strategy file")->required();
  sp->add_option("--b", o.b, "Player-2 strategy file")->required();
  sp->add_option("--depth", o.depth, "steps per play")->capture_default_str();
  sp->add_option("--seed", o.seed, "seed of the first play")->capture_default_str();
  sp->add_option("--count", o.count, "number of plays")->capture_default_str();
  sp->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*rf) return cmd_reduce_forward(o);
    if (*rp) return cmd_reduce_pomdp(o);
    if (*ms) return cmd_measure(o);
    if (*sv) return cmd_solve(o);
    if (*vf) return cmd_verify(o);
    return cmd_sample(o);
  } catch (const ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const ValidationError& e) {
    for (const auto& s : e.issues) std::cerr << "invalid: " << s << "\n";
    return kExitInvalid;
  } catch (const DomainError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kExitInvalid;
  }
}
