#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ug/errors.hpp"
#include "ug/io.hpp"
#include "ug/random.hpp"
#include "ug/reduce_forward.hpp"

using namespace ug;

namespace {

std::string data(const char* name) { return std::string(UG_TEST_DATA) + "/" + name; }

void require_same_game(const UncertaintyGame& a, const UncertaintyGame& b) {
  REQUIRE(a.locations == b.locations);
  REQUIRE(a.inputs == b.inputs);
  REQUIRE(a.outputs == b.outputs);
  REQUIRE(a.initial == b.initial);
  REQUIRE(a.delta == b.delta);
  REQUIRE(a.un == b.un);
  REQUIRE(a.objective.has_value() == b.objective.has_value());
  if (a.objective) {
    REQUIRE(a.objective->kind == b.objective->kind);
    REQUIRE(a.objective->target == b.objective->target);
    REQUIRE(a.objective->priority == b.objective->priority);
  }
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("malformed JSON names line and column") {
    try {
      io::parse_json("{\n  \"a\": [1, 2,\n}");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(io::read_json_file(data("malformed_game.json")), ParseError);
    CHECK_THROWS_AS(io::read_json_file(data("does_not_exist.json")), ParseError);
  }

  TEST_CASE("game round trip, with every objective kind") {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 25; ++k) {
      UncertaintyGame g = random_game(rng);
      const auto kind = static_cast<ObjectiveKind>(k % 5);
      g.objective = random_objective(rng, kind, g.num_locations());
      const UncertaintyGame back = io::game_from_json(io::parse_json(io::game_to_json(g).dump(2)));
      require_same_game(g, back);
      CHECK(validate_game(back).empty());
    }
  }

  TEST_CASE("bundled files load") {
    const auto id = io::game_from_json(io::read_json_file(data("identity_game.json")));
    CHECK(validate_game(id).empty());
    const auto bad = io::game_from_json(io::read_json_file(data("bad_sum_game.json")));
    CHECK_FALSE(validate_game(bad).empty());
    const auto f = io::strategy_from_json(id, io::read_json_file(data("identity_alpha.json")));
    CHECK(f.player == 1);
    CHECK(f.alpha.at(PrefixG(0)) == Dist::dirac(0));
  }

  TEST_CASE("unknown letters are parse errors with a path") {
    auto j = io::read_json_file(data("noisy_game.json"));
    j["delta"][1]["in"] = "zz";
    try {
      io::game_from_json(j);
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("$.delta[1]") != std::string::npos);
    }
    j = io::read_json_file(data("noisy_game.json"));
    j["delta"][0]["to"][0]["prob"] = "two";
    CHECK_THROWS_AS(io::game_from_json(j), ParseError);
    j = io::read_json_file(data("noisy_game.json"));
    j.erase("un");
    CHECK_THROWS_AS(io::game_from_json(j), ParseError);
  }

  TEST_CASE("unknown locations in distributions surface in validation") {
    auto j = io::read_json_file(data("noisy_game.json"));
    j["delta"][0]["to"][1]["loc"] = "ghost";
    const auto g = io::game_from_json(j);
    const auto rep = validate_game(g);
    REQUIRE_FALSE(rep.empty());
    bool named = false;
    for (const auto& s : rep) named = named || s.find("ghost") != std::string::npos;
    CHECK(named);
  }

  TEST_CASE("strategy round trip for both players and variants") {
    std::mt19937_64 rng(62);
    for (int k = 0; k < 10; ++k) {
      const UncertaintyGame g = random_game(rng);
      const auto a = random_strategy_g1(g, 2, StrategyShape::General, k);
      const auto fa = io::strategy_from_json(g, io::parse_json(io::strategy_to_json(g, a).dump()));
      CHECK(fa.player == 1);
      CHECK(fa.alpha.depth == a.depth);
      CHECK(fa.alpha.table == a.table);
      for (auto v : {Player2Variant::Ordinary, Player2Variant::AllPowerful}) {
        const auto b = random_strategy_g2(g, 2, v, StrategyShape::General, k + 10);
        const auto fb = io::strategy_from_json(g, io::parse_json(io::strategy_to_json(g, b).dump()));
        CHECK(fb.player == 2);
        CHECK(fb.beta.variant == v);
        CHECK(fb.beta.table == b.table);
      }
    }
  }

  TEST_CASE("alternating game and POMDP round trips") {
    std::mt19937_64 rng(63);
    for (int k = 0; k < 10; ++k) {
      UncertaintyGame g = random_game(rng);
      g.objective = random_objective(rng, ObjectiveKind::Parity, g.num_locations());
      const ReducedGame r = reduce_game(g, g.objective, ReductionMode::Standard);
      const io::PogFile f = io::pog_from_json(io::parse_json(io::pog_to_json(r.pog).dump()));
      CHECK(f.pog.states == r.pog.states);
      CHECK(f.pog.owner == r.pog.owner);
      CHECK(f.pog.delta == r.pog.delta);
      CHECK(f.pog.obs1 == r.pog.obs1);
      CHECK(f.pog.obs2 == r.pog.obs2);
      CHECK(f.pog.initial == r.pog.initial);

      const io::Json red = io::reduced_to_json(r, g);
      CHECK(red["mode"] == "standard");
      CHECK(red["provenance"].size() == static_cast<std::size_t>(r.pog.num_states()));
      const io::PogFile rf = io::pog_from_json(red);
      REQUIRE(rf.objective.has_value());
      CHECK(rf.objective->priority == r.priority);

      Pomdp m = random_pomdp(rng);
      m.objective = random_objective(rng, ObjectiveKind::Reach, m.num_states());
      const Pomdp mb = io::pomdp_from_json(io::parse_json(io::pomdp_to_json(m).dump()));
      CHECK(mb.states == m.states);
      CHECK(mb.delta == m.delta);
      CHECK(mb.obs == m.obs);
      CHECK(mb.objective->target == m.objective->target);
    }
  }
}
