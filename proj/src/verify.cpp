#include "ug/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <utility>

#include "ug/errors.hpp"
#include "ug/measure.hpp"
#include "ug/reduce_pomdp.hpp"

namespace ug {

const char* lemma_name(LemmaKind k) {
  switch (k) {
    case LemmaKind::ObsSeqConditional: return "ObsSeqConditional";
    case LemmaKind::ConeForwardG2H: return "ConeForwardG2H";
    case LemmaKind::ConeForwardH2G: return "ConeForwardH2G";
    case LemmaKind::PomdpObsSeqFormula: return "PomdpObsSeqFormula";
    case LemmaKind::ConePomdpH2G: return "ConePomdpH2G";
    case LemmaKind::ConePomdpG2H: return "ConePomdpG2H";
    case LemmaKind::ObsBasedMapping: return "ObsBasedMapping";
    case LemmaKind::PriorityLift: return "PriorityLift";
  }
  return "?";
}

std::optional<LemmaKind> parse_lemma_kind(const std::string& s) {
  for (LemmaKind k : all_lemmas()) {
    if (s == lemma_name(k)) return k;
  }
  if (s == lemma_name(LemmaKind::PriorityLift)) return LemmaKind::PriorityLift;
  return std::nullopt;
}

const std::vector<LemmaKind>& all_lemmas() {
  static const std::vector<LemmaKind> all{LemmaKind::ObsSeqConditional, LemmaKind::ConeForwardG2H,
                                          LemmaKind::ConeForwardH2G,    LemmaKind::PomdpObsSeqFormula,
                                          LemmaKind::ConePomdpH2G,      LemmaKind::ConePomdpG2H,
                                          LemmaKind::ObsBasedMapping};
  return all;
}

bool is_pomdp_lemma(LemmaKind k) {
  return k == LemmaKind::PomdpObsSeqFormula || k == LemmaKind::ConePomdpH2G || k == LemmaKind::ConePomdpG2H ||
         k == LemmaKind::ObsBasedMapping;
}

const char* mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::DropUn: return "drop-un";
    case Mutation::SwapObs1: return "swap-obs1";
    case Mutation::BreakPriority: return "break-priority";
  }
  return "?";
}

const char* shape_name(StrategyShape s) {
  switch (s) {
    case StrategyShape::General: return "general";
    case StrategyShape::CurrentObservation: return "current";
    case StrategyShape::Blind: return "blind";
  }
  return "?";
}

std::optional<StrategyShape> parse_shape(const std::string& s) {
  if (s == "general") return StrategyShape::General;
  if (s == "current") return StrategyShape::CurrentObservation;
  if (s == "blind") return StrategyShape::Blind;
  return std::nullopt;
}

void apply_mutation(ReducedGame& r, const UncertaintyGame& g, Mutation m) {
  PartialObsGame& h = r.pog;
  const int n = r.num_locations;
  switch (m) {
    case Mutation::None:
      return;
    case Mutation::DropUn:
      for (int s = 0; s < h.num_states(); ++s) {
        if (r.is_player1_state(s)) continue;
        for (int o = 0; o < g.num_outputs(); ++o) {
          std::map<int, Rational> w;
          for (const auto& [l1, p] : g.Delta(r.first(s), r.letter(s), o)) {
            for (int l2 = 0; l2 < n; ++l2) w[r.s1(l1, l2)] = p;
          }
          h.delta[s][o] = Dist(w);
        }
      }
      return;
    case Mutation::SwapObs1:
      h.obs1_blocks.assign(2 * n, {});
      for (int s = 0; s < h.num_states(); ++s) h.obs1_blocks[(r.is_player1_state(s) ? 0 : n) + r.first(s)].push_back(s);
      h.index_observations();
      return;
    case Mutation::BreakPriority:
      for (int s = 0; s < h.num_states(); ++s) {
        if (!r.priority.empty()) r.priority[s] = g.objective->priority[r.second(s)];
        if (!r.target.empty()) r.target[s] = g.objective->target[r.second(s)];
      }
      return;
  }
}

// ---------------------------------------------------------------- instances

GameInstance random_game_instance(std::uint64_t seed, int depth, Player2Variant variant, StrategyShape shape,
                                  const RandomGameParams& p) {
  std::mt19937_64 rng(seed);
  GameInstance inst;
  inst.game = random_game(rng, p);
  inst.game.objective = random_objective(rng, ObjectiveKind::Parity, inst.game.num_locations(), 2);
  inst.alpha = random_strategy_g1(inst.game, depth, shape, splitmix64(seed ^ 0xa1));
  inst.beta = random_strategy_g2(inst.game, depth, variant, shape, splitmix64(seed ^ 0xb2));
  inst.variant = variant;
  inst.seed = splitmix64(seed ^ 0xc3);
  inst.shape = shape;
  inst.description = "game seed " + std::to_string(seed) + ", |L|=" + std::to_string(inst.game.num_locations()) +
                     ", " + (variant == Player2Variant::AllPowerful ? "all-powerful" : "ordinary") + ", " +
                     shape_name(shape) + " strategies";
  return inst;
}

PomdpInstance random_pomdp_instance(std::uint64_t seed, StrategyShape shape, const RandomPomdpParams& p) {
  std::mt19937_64 rng(seed);
  PomdpInstance inst;
  inst.pomdp = random_pomdp(rng, p);
  inst.seed = splitmix64(seed ^ 0xd4);
  inst.shape = shape;
  inst.description = "pomdp seed " + std::to_string(seed) + ", |S|=" + std::to_string(inst.pomdp.num_states()) +
                     ", " + shape_name(shape) + " strategies";
  return inst;
}

// ---------------------------------------------------------------- bounds

std::uint64_t enumeration_cost(int locations, int letters, int depth) {
  double c = std::pow(static_cast<double>(locations), 2.0 * (depth + 1)) * std::pow(static_cast<double>(letters), depth);
  return c > 1.8e19 ? UINT64_MAX : static_cast<std::uint64_t>(c);
}

std::uint64_t enumeration_bound() {
  if (const char* env = std::getenv("UG_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return enumeration_cost(4, 4, 3);
}

namespace {

std::optional<std::string> refuse(int locations, int letters, int depth) {
  const std::uint64_t cost = enumeration_cost(locations, letters, depth);
  const std::uint64_t bound = enumeration_bound();
  if (cost <= bound) return std::nullopt;
  return "estimated " + std::to_string(cost) + " prefix pairs exceeds the enumeration bound " + std::to_string(bound) +
         " (raise UG_MAX_ENUM to allow)";
}

// Keeps the actions of an observation sequence and, per shape, the last
// observation or all of them.
std::vector<int> project_key(const std::vector<int>& key, StrategyShape shape) {
  if (shape == StrategyShape::General) return key;
  std::vector<int> out;
  for (std::size_t k = 1; k < key.size(); k += 2) out.push_back(key[k]);
  if (shape == StrategyShape::CurrentObservation && !key.empty()) out.push_back(key.back());
  return out;
}

HashedPolicy::Projection projection(StrategyShape shape) {
  return [shape](const std::vector<int>& key) { return project_key(key, shape); };
}

// First action where two rows differ.
Counterexample row_difference(const Dist& a, const Dist& b, const std::string& left, const std::string& right,
                              const std::string& note) {
  Counterexample c{left, right, 0, 0, note};
  std::map<int, int> keys;
  for (const auto& [x, w] : a) keys[x] = 1;
  for (const auto& [x, w] : b) keys[x] = 1;
  for (const auto& [x, unused] : keys) {
    if (a(x) != b(x)) {
      c.left_value = a(x);
      c.right_value = b(x);
      c.note += " (action #" + std::to_string(x) + ")";
      break;
    }
  }
  return c;
}

ReductionMode mode_for(Player2Variant v) {
  return v == Player2Variant::AllPowerful ? ReductionMode::AllPowerful : ReductionMode::Standard;
}

// H cone masses at 2n steps: aggregated by first component, and per pair.
struct HMasses {
  std::map<PrefixG, Rational> first;
  std::map<std::pair<PrefixG, PrefixG>, Rational> pair;
};

HMasses h_masses(const ReducedGame& r, const HStrategy& alpha, const HStrategy& beta, int n, bool pairs) {
  HMasses out;
  for_each_cone_pog(r.pog, alpha, beta, 2 * n, [&](const PrefixH& rho, const Rational& mass) {
    PrefixG g1 = project_prefix(r, rho, Component::First);
    if (pairs) out.pair[{g1, project_prefix(r, rho, Component::Second)}] += mass;
    out.first[std::move(g1)] += mass;
  });
  return out;
}

std::optional<Counterexample> compare_cones(const UncertaintyGame& g, ConeMeasure& cm, const HMasses& hm, int n,
                                            std::size_t& checked) {
  std::map<PrefixG, Rational> gm;
  cm.for_each_cone(n, false, [&](const PrefixG& rho, const Rational& m) { gm[rho] = m; });
  const std::map<PrefixG, Rational>& hf = hm.first;
  for (const std::map<PrefixG, Rational>* side : {&std::as_const(gm), &hf}) {
    for (const auto& [rho, unused] : *side) {
      ++checked;
      auto a = gm.find(rho);
      auto b = hm.first.find(rho);
      const Rational va = a == gm.end() ? Rational(0) : a->second;
      const Rational vb = b == hm.first.end() ? Rational(0) : b->second;
      if (va != vb) {
        return Counterexample{format_prefix(g, rho), "first-component cone in H", va, vb,
                              "G cone vs aggregated H cones at " + std::to_string(n) + " steps"};
      }
    }
  }
  return std::nullopt;
}

LemmaReport check_obs_seq_conditional(const GameInstance& inst, const ReducedGame& r, int depth) {
  LemmaReport rep;
  auto hs = map_strategies_g_to_h(r, inst.alpha, inst.beta);
  for (int n = 0; n <= depth; ++n) {
    const HMasses hm = h_masses(r, *hs.alpha, *hs.beta, n, true);
    for (const auto& [rho1, e1] : hm.first) {
      for (const PrefixG& rho2 : enumerate_act_mt(inst.game, rho1)) {
        ++rep.checked;
        auto it = hm.pair.find({rho1, rho2});
        const Rational joint = it == hm.pair.end() ? Rational(0) : it->second;
        const Rational lhs = joint / e1;
        const Rational rhs = obs_seq(inst.game, rho1, rho2);
        if (lhs != rhs) {
          rep.counterexample = Counterexample{format_prefix(inst.game, rho1), format_prefix(inst.game, rho2), lhs, rhs,
                                              "Pr(first and second component) / Pr(first component) vs ObsSeq"};
          return rep;
        }
      }
    }
  }
  return rep;
}

LemmaReport check_cone_g2h(const GameInstance& inst, const ReducedGame& r, int depth) {
  LemmaReport rep;
  auto hs = map_strategies_g_to_h(r, inst.alpha, inst.beta);
  if (depth > 0) {
    if (auto w = find_observation_violation(r.pog, 1, *hs.alpha, 2 * depth - 1)) {
      rep.counterexample = row_difference(hs.alpha->at(w->first), hs.alpha->at(w->second),
                                          format_prefix(r.pog, w->first), format_prefix(r.pog, w->second),
                                          "mapped Player-1 strategy differs on equal observations");
      return rep;
    }
    if (auto w = find_observation_violation(r.pog, 2, *hs.beta, 2 * depth - 1)) {
      rep.counterexample = row_difference(hs.beta->at(w->first), hs.beta->at(w->second),
                                          format_prefix(r.pog, w->first), format_prefix(r.pog, w->second),
                                          "mapped Player-2 strategy differs on equal observations");
      return rep;
    }
  }
  ConeMeasure cm(inst.game, inst.alpha, inst.beta);
  for (int n = 0; n <= depth; ++n) {
    if (auto c = compare_cones(inst.game, cm, h_masses(r, *hs.alpha, *hs.beta, n, false), n, rep.checked)) {
      rep.counterexample = c;
      return rep;
    }
  }
  return rep;
}

LemmaReport check_cone_h2g(const GameInstance& inst, const ReducedGame& r, int depth) {
  LemmaReport rep;
  const PartialObsGame& h = r.pog;
  ObsBasedStrategy alpha(h, 1,
                         std::make_shared<HashedPolicy>(splitmix64(inst.seed + 1), inst.game.num_inputs(),
                                                        projection(inst.shape)));
  ObsBasedStrategy beta(h, 2,
                        std::make_shared<HashedPolicy>(splitmix64(inst.seed + 2), inst.game.num_outputs(),
                                                       projection(inst.shape)));
  StrategiesG gs;
  try {
    gs = map_strategies_h_to_g(r, alpha, beta, inst.variant, depth);
  } catch (const NotObservationBased& e) {
    const HStrategy& s = e.player == 1 ? static_cast<const HStrategy&>(alpha) : beta;
    rep.counterexample = row_difference(s.at(e.witness.first), s.at(e.witness.second), format_prefix(h, e.witness.first),
                                        format_prefix(h, e.witness.second),
                                        "Player-" + std::to_string(e.player) +
                                            " strategy is observation-based in H but not a function of its G view");
    return rep;
  }
  ConeMeasure cm(inst.game, gs.alpha, gs.beta);
  for (int n = 0; n <= depth; ++n) {
    if (auto c = compare_cones(inst.game, cm, h_masses(r, alpha, beta, n, false), n, rep.checked)) {
      rep.counterexample = c;
      return rep;
    }
  }
  return rep;
}

// Every lasso read off a positive-probability H path, compared with the
// lasso of first components in G.
LemmaReport check_priority_lift(const GameInstance& inst, const ReducedGame& r, int depth) {
  LemmaReport rep;
  if (!inst.game.objective) throw DomainError("PriorityLift needs a game objective");
  const Objective& og = *inst.game.objective;
  const Objective oh{og.kind, r.target, r.priority};
  const PartialObsGame& h = r.pog;
  std::function<bool(std::vector<int>&, int)> dfs = [&](std::vector<int>& states, int remaining) {
    for (std::size_t cut = 0; cut < states.size(); ++cut) {
      std::vector<int> stem(states.begin(), states.begin() + cut), cycle(states.begin() + cut, states.end());
      std::vector<int> gstem, gcycle;
      for (int s : stem) gstem.push_back(r.first(s));
      for (int s : cycle) gcycle.push_back(r.first(s));
      ++rep.checked;
      const bool vh = eval_objective_on_lasso(oh, stem, cycle);
      const bool vg = eval_objective_on_lasso(og, gstem, gcycle);
      if (vh != vg) {
        auto names = [&](const std::vector<int>& v, bool in_h) {
          std::string out;
          for (int s : v) out += (out.empty() ? "" : " ") + (in_h ? h.states[s] : inst.game.locations[s]);
          return out;
        };
        rep.counterexample = Counterexample{names(stem, true) + " (" + names(cycle, true) + ")^w",
                                            names(gstem, false) + " (" + names(gcycle, false) + ")^w", vh ? 1 : 0,
                                            vg ? 1 : 0, "objective value of the H lasso vs its first projection"};
        return true;
      }
    }
    if (remaining == 0) return false;
    const int last = states.back();
    for (int a = 0; a < h.num_actions_at(last); ++a) {
      for (const auto& [t, w] : h.delta[last][a]) {
        states.push_back(t);
        const bool stop = dfs(states, remaining - 1);
        states.pop_back();
        if (stop) return true;
      }
    }
    return false;
  };
  for (const auto& [s0, w] : h.initial) {
    std::vector<int> states{s0};
    if (dfs(states, 2 * depth)) break;
  }
  return rep;
}

}  // namespace

LemmaReport check_lemma(LemmaKind kind, const GameInstance& inst, int depth, Mutation mutation) {
  if (is_pomdp_lemma(kind)) throw DomainError(std::string(lemma_name(kind)) + " needs a POMDP instance");
  LemmaReport rep;
  const auto& g = inst.game;
  if (auto why = refuse(g.num_locations(), g.num_inputs() * g.num_outputs(), depth)) {
    rep.refusal = why;
  } else {
    ReducedGame r = reduce_game(g, g.objective, mode_for(inst.variant));
    apply_mutation(r, g, mutation);
    switch (kind) {
      case LemmaKind::ObsSeqConditional: rep = check_obs_seq_conditional(inst, r, depth); break;
      case LemmaKind::ConeForwardG2H: rep = check_cone_g2h(inst, r, depth); break;
      case LemmaKind::ConeForwardH2G: rep = check_cone_h2g(inst, r, depth); break;
      default: rep = check_priority_lift(inst, r, depth); break;
    }
  }
  rep.kind = kind;
  rep.instance = inst.description + (mutation == Mutation::None ? "" : std::string(", mutation ") + mutation_name(mutation));
  return rep;
}

// ---------------------------------------------------------------- POMDP lemmas

namespace {

// Every POMDP prefix of exactly n steps, reachable or not.
void for_each_pomdp_prefix(const Pomdp& m, int n, const std::function<void(const PrefixH&)>& fn) {
  std::function<void(PrefixH&, int)> rec = [&](PrefixH& rho, int remaining) {
    if (remaining == 0) {
      fn(rho);
      return;
    }
    for (int a = 0; a < m.num_actions(); ++a) {
      for (int t = 0; t < m.num_states(); ++t) {
        rho.seq.push_back(a);
        rho.seq.push_back(t);
        rec(rho, remaining - 1);
        rho.seq.resize(rho.seq.size() - 2);
      }
    }
  };
  for (int s = 0; s < m.num_states(); ++s) {
    PrefixH rho({s});
    rec(rho, n);
  }
}

LemmaReport check_pomdp_obs_seq(const PomdpInstance& inst, const PomdpReduction& r, int depth) {
  LemmaReport rep;
  const Pomdp& m = inst.pomdp;
  std::vector<int> block_size(m.num_states());
  for (int s = 0; s < m.num_states(); ++s) block_size[s] = static_cast<int>(m.blocks[m.obs[s]].size());
  for (int n = 0; n <= depth && !rep.counterexample; ++n) {
    for_each_pomdp_prefix(m, n, [&](const PrefixH& rho) {
      if (rep.counterexample) return;
      const PrefixG rg = prefix_to_game(rho);
      const auto key = observation_seq(m, rho);
      long denom = 1;
      for (int j = 0; j <= rho.steps(); ++j) denom *= block_size[rho.state(j)];
      const Rational formula = Rational(1) / denom;
      for (const PrefixG& other : enumerate_act_mt(r.game, rg)) {
        ++rep.checked;
        const Rational expect = observation_seq(m, prefix_to_pomdp(other)) == key ? formula : Rational(0);
        const Rational got = obs_seq(r.game, rg, other);
        if (got != expect) {
          rep.counterexample = Counterexample{format_prefix(r.game, rg), format_prefix(r.game, other), got, expect,
                                              "ObsSeq vs product of inverse block sizes"};
          return;
        }
      }
    });
  }
  return rep;
}

std::optional<Counterexample> compare_pomdp_cones(const PomdpReduction& r, const KeyedPolicy& alpha_h,
                                                  const StrategyG1& alpha_g, const StrategyG2& beta, int depth,
                                                  std::size_t& checked) {
  ConeMeasure cm(r.game, alpha_g, beta);
  std::optional<Counterexample> out;
  for (int n = 0; n <= depth && !out; ++n) {
    for_each_cone_pomdp(*r.source, alpha_h, n, true, [&](const PrefixH& rho, const Rational& mass) {
      if (out) return;
      ++checked;
      const PrefixG rg = prefix_to_game(rho);
      // Plays of G start at the initial location; other cones are empty.
      const Rational mg = rg.loc(0) == r.game.initial ? cm.cone(rg) : Rational(0);
      if (mass != mg) {
        out = Counterexample{format_prefix(*r.source, rho), format_prefix(r.game, rg), mass, mg,
                             "POMDP cone vs cone of the mapped prefix"};
      }
    });
  }
  return out;
}

LemmaReport check_pomdp_h2g(const PomdpInstance& inst, const PomdpReduction& r, int depth) {
  LemmaReport rep;
  HashedPolicy alpha_h(splitmix64(inst.seed + 3), inst.pomdp.num_actions(), projection(inst.shape));
  const StrategyG1 alpha_g = strategy_pomdp_to_g(r, alpha_h, depth);
  rep.counterexample = compare_pomdp_cones(r, alpha_h, alpha_g, trivial_output_strategy(r, depth), depth, rep.checked);
  return rep;
}

LemmaReport check_pomdp_g2h(const PomdpInstance& inst, const PomdpReduction& r, int depth) {
  LemmaReport rep;
  const StrategyG1 alpha_g = random_strategy_g1(r.game, depth, inst.shape, splitmix64(inst.seed + 4));
  const auto alpha_h = strategy_g_to_pomdp(r, alpha_g, depth);
  rep.counterexample = compare_pomdp_cones(r, *alpha_h, alpha_g, trivial_output_strategy(r, depth), depth, rep.checked);
  return rep;
}

// Every reachable history is mapped on its own; histories with the same
// observation sequence must receive the same row, and every row must be a
// distribution.
LemmaReport check_obs_based_mapping(const PomdpInstance& inst, const PomdpReduction& r, int depth) {
  LemmaReport rep;
  const Pomdp& m = inst.pomdp;
  const StrategyG1 alpha_g = random_strategy_g1(r.game, depth, inst.shape, splitmix64(inst.seed + 4));
  std::map<std::vector<int>, std::pair<PrefixH, Dist>> seen;
  std::function<void(const PrefixH&)> rec = [&](const PrefixH& rho) {
    if (rep.counterexample || rho.steps() >= depth) return;
    ++rep.checked;
    const Dist d = pomdp_mixture_at(r, alpha_g, rho);
    if (d.total() != 1) {
      rep.counterexample = Counterexample{format_prefix(m, rho), "1", d.total(), 1, "mixture row does not sum to 1"};
      return;
    }
    auto [it, fresh] = seen.emplace(observation_seq(m, rho), std::make_pair(rho, d));
    if (!fresh && !(it->second.second == d)) {
      rep.counterexample = row_difference(it->second.second, d, format_prefix(m, it->second.first),
                                          format_prefix(m, rho), "mixture differs on equal observation sequences");
      return;
    }
    for (int a = 0; a < m.num_actions(); ++a) {
      for (const auto& [t, w] : m.delta[rho.last()][a]) rec(rho.extended(a, t));
    }
  };
  rec(PrefixH({m.initial}));
  return rep;
}

}  // namespace

LemmaReport check_lemma(LemmaKind kind, const PomdpInstance& inst, int depth) {
  if (!is_pomdp_lemma(kind)) throw DomainError(std::string(lemma_name(kind)) + " needs a game instance");
  LemmaReport rep;
  const Pomdp& m = inst.pomdp;
  if (auto why = refuse(m.num_states(), m.num_actions(), depth)) {
    rep.refusal = why;
  } else {
    const PomdpReduction r = reduce_pomdp(m);
    switch (kind) {
      case LemmaKind::PomdpObsSeqFormula: rep = check_pomdp_obs_seq(inst, r, depth); break;
      case LemmaKind::ConePomdpH2G: rep = check_pomdp_h2g(inst, r, depth); break;
      case LemmaKind::ConePomdpG2H: rep = check_pomdp_g2h(inst, r, depth); break;
      default: rep = check_obs_based_mapping(inst, r, depth); break;
    }
  }
  rep.kind = kind;
  rep.instance = inst.description;
  return rep;
}

// ---------------------------------------------------------------- sampling

namespace {

int draw(const Dist& d, std::mt19937_64& rng) {
  if (d.empty()) throw DomainError("sampling from an empty distribution");
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  double acc = 0;
  for (const auto& [x, p] : d) {
    acc += to_double(p);
    if (u < acc) return x;
  }
  return d.entries().back().first;
}

}  // namespace

SampleTrace sample_play(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta, int depth,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SampleTrace t;
  t.seed = seed;
  t.truth = PrefixG(g.initial);
  t.observed = PrefixG(draw(g.Un(g.initial), rng));
  for (int j = 0; j < depth; ++j) {
    const int in = draw(alpha.at(t.observed), rng);
    const int out = draw(beta.variant == Player2Variant::AllPowerful ? beta.at(t.truth, t.observed, in)
                                                                     : beta.at(t.truth, in),
                         rng);
    const int next = draw(g.Delta(t.truth.last(), in, out), rng);
    const int seen = draw(g.Un(next), rng);
    t.truth = t.truth.extended(in, out, next);
    t.observed = t.observed.extended(in, out, seen);
  }
  return t;
}

ConeEstimate monte_carlo_event(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta,
                               const std::function<bool(const PrefixG&)>& event, int depth, std::size_t samples,
                               std::uint64_t seed) {
  if (samples == 0) throw DomainError("Monte Carlo estimate needs at least one sample");
  ConeEstimate e;
  e.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    if (event(sample_play(g, alpha, beta, depth, splitmix64(seed + k)).truth)) ++e.hits;
  }
  e.mean = static_cast<double>(e.hits) / static_cast<double>(samples);
  e.stderr_hat = std::sqrt(e.mean * (1 - e.mean) / static_cast<double>(samples));
  return e;
}

ConeEstimate monte_carlo_cone(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta,
                              const PrefixG& rho, std::size_t samples, std::uint64_t seed) {
  return monte_carlo_event(g, alpha, beta, [&](const PrefixG& t) { return t == rho; }, rho.steps(), samples, seed);
}

}  // namespace ug
