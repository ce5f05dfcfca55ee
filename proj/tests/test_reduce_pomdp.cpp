#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ug/errors.hpp"
#include "ug/measure.hpp"
#include "ug/random.hpp"
#include "ug/reduce_pomdp.hpp"
#include "ug/verify.hpp"

using namespace ug;
using fx::D;

namespace {

// s, t share one observation; u has its own. Action a moves s to t with
// probability 1/2, b moves anything to u.
Pomdp two_block_pomdp() {
  Pomdp m;
  m.states = {"s", "t", "u"};
  m.actions = {"a", "b"};
  m.delta = {{D({{0, "1/2"}, {1, "1/2"}}), Dist::dirac(2)},
             {Dist::dirac(1), Dist::dirac(2)},
             {Dist::dirac(2), Dist::dirac(2)}};
  m.blocks = {{0, 1}, {2}};
  m.initial = 0;
  m.index_observations();
  return m;
}

}  // namespace

TEST_SUITE("reduce_pomdp") {
  TEST_CASE("reduced game: one output, uniform uncertainty over the block") {
    const Pomdp m = two_block_pomdp();
    const PomdpReduction r = reduce_pomdp(m);
    const UncertaintyGame& g = r.game;
    CHECK(validate_game(g).empty());
    CHECK(g.num_outputs() == 1);
    CHECK(g.un[0] == D({{0, "1/2"}, {1, "1/2"}}));
    CHECK(g.un[1] == D({{0, "1/2"}, {1, "1/2"}}));
    CHECK(g.un[2] == Dist::dirac(2));
    CHECK(g.Delta(0, 0, 0) == m.delta[0][0]);
  }

  TEST_CASE("prefix translation round trip") {
    const PrefixH h({0, 0, 1, 1, 2});
    const PrefixG p = prefix_to_game(h);
    CHECK(p == PrefixG(std::vector<int>{0, 0, 0, 1, 1, 0, 2}));
    CHECK(prefix_to_pomdp(p) == h);
    CHECK_THROWS_AS(prefix_to_pomdp(PrefixG(std::vector<int>{0, 0, 1, 1})), DomainError);
  }

  TEST_CASE("a strategy reading the blurred location mixes over the block") {
    const Pomdp m = two_block_pomdp();
    const PomdpReduction r = reduce_pomdp(m);
    const auto a = fx::table_g1(r.game, 2, [](const PrefixG& p) { return Dist::dirac(p.last() == 0 ? 0 : 1); });
    CHECK(pomdp_mixture_at(r, a, PrefixH({0})) == D({{0, "1/2"}, {1, "1/2"}}));
    CHECK(pomdp_mixture_at(r, a, PrefixH({0, 1, 2})) == Dist::dirac(1));
    // Both states of the block give the same mixture.
    CHECK(pomdp_mixture_at(r, a, PrefixH({1})) == pomdp_mixture_at(r, a, PrefixH({0})));
  }

  TEST_CASE("the trivial output strategy is the single output everywhere") {
    const Pomdp m = two_block_pomdp();
    const PomdpReduction r = reduce_pomdp(m);
    const StrategyG2 b = trivial_output_strategy(r, 3);
    for (const auto& [k, d] : b.table) CHECK(d == Dist::dirac(0));
    CHECK(b.at(PrefixG(0), 1) == Dist::dirac(0));
  }

  TEST_CASE("translated strategies give the same cones") {
    const Pomdp m = two_block_pomdp();
    const PomdpReduction r = reduce_pomdp(m);
    HashedPolicy ah(9, 2);
    const StrategyG1 ag = strategy_pomdp_to_g(r, ah, 3);
    const StrategyG2 b = trivial_output_strategy(r, 3);
    for (int n = 0; n <= 3; ++n) {
      for_each_cone_pomdp(m, ah, n, true, [&](const PrefixH& p, const Rational& w) {
        if (p.state(0) != m.initial) return;
        REQUIRE(cone_prob(r.game, ag, b, prefix_to_game(p)) == w);
      });
    }
  }

  TEST_CASE("correspondence checks pass on random POMDPs") {
    for (auto shape : {StrategyShape::General, StrategyShape::CurrentObservation, StrategyShape::Blind}) {
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const PomdpInstance inst = random_pomdp_instance(seed, shape);
        for (auto kind : {LemmaKind::PomdpObsSeqFormula, LemmaKind::ConePomdpH2G, LemmaKind::ConePomdpG2H,
                          LemmaKind::ObsBasedMapping}) {
          const LemmaReport rep = check_lemma(kind, inst, 3);
          INFO(lemma_name(kind), " ", shape_name(shape), " seed ", seed);
          REQUIRE(rep.verified());
          CHECK(rep.checked > 0);
        }
      }
    }
  }
}
