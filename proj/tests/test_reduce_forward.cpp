#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ug/errors.hpp"
#include "ug/measure.hpp"
#include "ug/random.hpp"
#include "ug/reduce_forward.hpp"
#include "ug/verify.hpp"

using namespace ug;
using fx::D;

TEST_SUITE("reduce_forward") {
  TEST_CASE("state layout, owners and observation partitions") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 20; ++k) {
      const UncertaintyGame g = random_game(rng);
      const int n = g.num_locations(), in = g.num_inputs();
      for (auto mode : {ReductionMode::Standard, ReductionMode::AllPowerful}) {
        const ReducedGame r = reduce_game(g, std::nullopt, mode);
        REQUIRE(validate_pog(r.pog).empty());
        REQUIRE(r.pog.num_states() == n * n * (1 + in));
        for (int l1 = 0; l1 < n; ++l1) {
          for (int l2 = 0; l2 < n; ++l2) {
            CHECK(r.first(r.s1(l1, l2)) == l1);
            CHECK(r.second(r.s1(l1, l2)) == l2);
            CHECK(r.pog.owner[r.s1(l1, l2)] == 1);
            for (int i = 0; i < in; ++i) {
              const int m = r.s2(l1, l2, i);
              CHECK(r.first(m) == l1);
              CHECK(r.second(m) == l2);
              CHECK(r.letter(m) == i);
              CHECK(r.pog.owner[m] == 2);
            }
          }
        }
        for (int s = 0; s < r.pog.num_states(); ++s) {
          for (int t = 0; t < r.pog.num_states(); ++t) {
            const bool same_kind = r.is_player1_state(s) == r.is_player1_state(t);
            CHECK((r.pog.obs1[s] == r.pog.obs1[t]) == (same_kind && r.second(s) == r.second(t)));
            const bool p2_same = mode == ReductionMode::AllPowerful ? s == t : same_kind && r.first(s) == r.first(t);
            CHECK((r.pog.obs2[s] == r.pog.obs2[t]) == p2_same);
          }
        }
        CHECK(r.pog.complete_observation(2) == (mode == ReductionMode::AllPowerful));
      }
    }
  }

  TEST_CASE("Player-2 rows are Delta times the uncertainty of the new location") {
    std::mt19937_64 rng(22);
    for (int k = 0; k < 20; ++k) {
      const UncertaintyGame g = random_game(rng);
      const ReducedGame r = reduce_game(g, std::nullopt, ReductionMode::Standard);
      const int n = g.num_locations();
      for (int l1 = 0; l1 < n; ++l1) {
        for (int l2 = 0; l2 < n; ++l2) {
          for (int i = 0; i < g.num_inputs(); ++i) {
            CHECK(r.pog.delta[r.s1(l1, l2)][i] == Dist::dirac(r.s2(l1, l2, i)));
            for (int o = 0; o < g.num_outputs(); ++o) {
              const Dist& row = r.pog.delta[r.s2(l1, l2, i)][o];
              for (int t1 = 0; t1 < n; ++t1) {
                for (int t2 = 0; t2 < n; ++t2) {
                  CHECK(row(r.s1(t1, t2)) == g.Delta(l1, i, o)(t1) * g.Un(t1)(t2));
                }
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("initial distribution spreads over the uncertainty of the start") {
    const auto g = fx::blurred_pair();
    const ReducedGame r = reduce_game(g, std::nullopt, ReductionMode::Standard);
    CHECK(r.pog.initial == D({{r.s1(0, 0), "1/2"}, {r.s1(0, 1), "1/2"}}));
  }

  TEST_CASE("priorities and targets follow the true location") {
    auto g = fx::blurred_pair();
    g.objective = Objective{ObjectiveKind::Buchi, {false, true}, {}};
    const ReducedGame r = reduce_game(g, g.objective, ReductionMode::AllPowerful);
    for (int s = 0; s < r.pog.num_states(); ++s) {
      CHECK(r.target[s] == (r.first(s) == 1));
      CHECK(r.priority[s] == (r.first(s) == 1 ? 0 : 1));
    }
  }

  TEST_CASE("projection and pairing are inverse") {
    std::mt19937_64 rng(23);
    const UncertaintyGame g = random_game(rng);
    const ReducedGame r = reduce_game(g, std::nullopt, ReductionMode::Standard);
    for (int n = 0; n <= 2; ++n) {
      fx::for_each_prefix(g, n, [&](const PrefixG& p) {
        for (const PrefixG& q : enumerate_act_mt(g, p)) {
          const PrefixH h = pair_prefix(r, p, q);
          REQUIRE(h.steps() == 2 * n);
          REQUIRE(project_prefix(r, h, Component::First) == p);
          REQUIRE(project_prefix(r, h, Component::Second) == q);
          REQUIRE(destutter(r, h).size() == static_cast<std::size_t>(3 * n + 1));
        }
      });
    }
    CHECK_THROWS_AS(pair_prefix(r, PrefixG(0), PrefixG(0).extended(0, 0, 0)), DomainError);
    CHECK_THROWS_AS(project_prefix(r, PrefixH({0, 0, r.s2(0, 0, 0)}), Component::First), DomainError);
  }

  TEST_CASE("G-to-H strategies read the right component") {
    auto g = fx::blurred_pair();
    const ReducedGame r = reduce_game(g, std::nullopt, ReductionMode::Standard);
    const auto a = fx::table_g1(g, 1, [](const PrefixG& p) { return Dist::dirac(p.last()); });
    const auto b = fx::constant_g2(g, 1, 0);
    const auto hs = map_strategies_g_to_h(r, a, b);
    CHECK(hs.alpha->at(PrefixH({r.s1(0, 1)})) == Dist::dirac(1));
    CHECK(hs.alpha->at(PrefixH({r.s1(1, 0)})) == Dist::dirac(0));
    CHECK(hs.beta->at(PrefixH({r.s1(0, 1), 1, r.s2(0, 1, 1)})) == Dist::dirac(0));
  }

  TEST_CASE("H-to-G rejects a Player-1 strategy that reads the true location") {
    auto g = fx::blurred_pair();
    g.delta[g.delta_index(0, 0, 0)] = D({{0, "1/2"}, {1, "1/2"}});
    g.un[1] = D({{0, "1/2"}, {1, "1/2"}});
    const ReducedGame r = reduce_game(g, std::nullopt, ReductionMode::Standard);
    class ReadsFirst : public HStrategy {
     public:
      explicit ReadsFirst(const ReducedGame& r) : r_(r) {}
      Dist at(const PrefixH& rho) const override { return Dist::dirac(r_.first(rho.last()) == 0 ? 0 : 1); }
      const ReducedGame& r_;
    } alpha(r);
    ObsBasedStrategy beta(r.pog, 2, std::make_shared<HashedPolicy>(1, 1));
    bool thrown = false;
    try {
      map_strategies_h_to_g(r, alpha, beta, Player2Variant::Ordinary, 2);
    } catch (const NotObservationBased& e) {
      thrown = true;
      CHECK(e.player == 1);
    }
    CHECK(thrown);
  }

  TEST_CASE("cone correspondence holds for strategies without observation memory") {
    for (auto shape : {StrategyShape::CurrentObservation, StrategyShape::Blind}) {
      for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const auto variant = seed % 2 ? Player2Variant::Ordinary : Player2Variant::AllPowerful;
        const GameInstance inst = random_game_instance(seed, 3, variant, shape);
        for (auto kind : {LemmaKind::ConeForwardG2H, LemmaKind::ConeForwardH2G, LemmaKind::PriorityLift}) {
          const LemmaReport rep = check_lemma(kind, inst, 3);
          INFO(lemma_name(kind), " ", shape_name(shape), " seed ", seed);
          REQUIRE(rep.verified());
          CHECK(rep.checked > 0);
        }
      }
    }
  }

  TEST_CASE("observation memory separates the G cone from the H cone") {
    // Player 1 repeats at step 1 what its first observation told it. In H
    // that first observation is correlated with the second step's; the G
    // cone formula draws each observation afresh.
    GameInstance inst;
    inst.game = fx::blurred_pair();
    inst.game.objective = Objective{ObjectiveKind::Parity, {}, {0, 1}};
    inst.alpha = fx::table_g1(inst.game, 2, [](const PrefixG& p) { return Dist::dirac(p.loc(0) == 0 ? 0 : 1); });
    inst.beta = fx::constant_g2(inst.game, 2, 0);
    inst.shape = StrategyShape::General;
    const LemmaReport rep = check_lemma(LemmaKind::ConeForwardG2H, inst, 2);
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.counterexample->left_value != rep.counterexample->right_value);
  }

  TEST_CASE("ObsSeq is the conditional law of observations for blind Player 1") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const auto variant = seed % 2 ? Player2Variant::Ordinary : Player2Variant::AllPowerful;
      const GameInstance inst = random_game_instance(seed, 3, variant, StrategyShape::Blind);
      REQUIRE(check_lemma(LemmaKind::ObsSeqConditional, inst, 3).verified());
    }
  }
}
