#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ug/errors.hpp"
#include "ug/io.hpp"
#include "ug/solvers.hpp"

using namespace ug;
using fx::D;

namespace {

// Alternating game with n1 Player-1 states (ids first) and n2 Player-2
// states; Player 2 sees everything, Player 1 a random partition (or
// singletons).
PartialObsGame sparse_pog(std::mt19937_64& rng, int n1, int n2, bool complete1) {
  PartialObsGame h;
  std::vector<int> p1, p2;
  for (int s = 0; s < n1 + n2; ++s) {
    h.states.push_back("q" + std::to_string(s));
    h.owner.push_back(s < n1 ? 1 : 2);
    (s < n1 ? p1 : p2).push_back(s);
  }
  h.actions1 = {"a", "b"};
  h.actions2 = {"x", "y"};
  h.delta.assign(n1 + n2, {});
  for (int s = 0; s < n1 + n2; ++s) {
    for (int a = 0; a < 2; ++a) h.delta[s].push_back(fx::sparse_row(rng, s < n1 ? p2 : p1));
  }
  auto partition = [&](const std::vector<int>& states, bool singletons) {
    std::vector<std::vector<int>> blocks;
    for (int s : states) {
      const std::size_t b = singletons ? blocks.size() : rng() % (blocks.size() + 1);
      if (b == blocks.size()) blocks.emplace_back();
      blocks[b].push_back(s);
    }
    return blocks;
  };
  h.obs1_blocks = partition(p1, complete1);
  for (auto& b : partition(p2, complete1)) h.obs1_blocks.push_back(b);
  h.obs2_blocks = partition(p1, true);
  for (auto& b : partition(p2, true)) h.obs2_blocks.push_back(b);
  h.initial = Dist::dirac(0);
  h.index_observations();
  return h;
}

StateObjective random_state_objective(std::mt19937_64& rng, ObjectiveKind kind, int n) {
  StateObjective o;
  o.kind = kind;
  if (kind == ObjectiveKind::Parity) {
    for (int s = 0; s < n; ++s) o.priority.push_back(static_cast<int>(rng() % 4));
  } else {
    o.target = fx::random_set(rng, n);
  }
  return o;
}

}  // namespace

TEST_SUITE("solvers") {
  TEST_CASE("dispatch table") {
    using K = ObjectiveKind;
    using M = WinMode;
    for (bool ap : {false, true}) {
      CHECK(unsupported_classification(K::CoBuchi, M::AlmostSure, ap) == std::optional<std::string>("undecidable"));
      CHECK(unsupported_classification(K::Parity, M::AlmostSure, ap) == std::optional<std::string>("undecidable"));
      CHECK(unsupported_classification(K::Buchi, M::Positive, ap) == std::optional<std::string>("undecidable"));
      CHECK(unsupported_classification(K::Parity, M::Positive, ap) == std::optional<std::string>("undecidable"));
      for (auto k : {K::Reach, K::Safe, K::Buchi, K::CoBuchi, K::Parity}) {
        CHECK_FALSE(unsupported_classification(k, M::Sure, ap).has_value());
      }
      CHECK_FALSE(unsupported_classification(K::Reach, M::Positive, ap).has_value());
    }
    CHECK(unsupported_classification(K::CoBuchi, M::Positive, true) ==
          std::optional<std::string>("EXPTIME-complete (no algorithm implemented)"));
    for (auto [k, m] : {std::pair{K::Reach, M::AlmostSure}, std::pair{K::Buchi, M::AlmostSure},
                        std::pair{K::Safe, M::Positive}, std::pair{K::CoBuchi, M::Positive}}) {
      const auto c = unsupported_classification(k, m, false);
      REQUIRE(c.has_value());
      CHECK(c->find("2EXPTIME") != std::string::npos);
    }
    for (auto k : {K::Reach, K::Safe, K::Buchi}) {
      CHECK_FALSE(unsupported_classification(k, M::AlmostSure, true).has_value());
    }
    CHECK_FALSE(unsupported_classification(K::Safe, M::Positive, true).has_value());
  }

  TEST_CASE("retry POMDP: almost-sure and positive reach win, sure reach loses") {
    const Pomdp m = io::pomdp_from_json(io::read_json_file(std::string(UG_TEST_DATA) + "/retry_pomdp.json"));
    const Objective& obj = *m.objective;
    auto win = [&](WinMode mode) {
      const SolveResult r = solve_pomdp(m, obj, mode);
      REQUIRE(r.supported);
      return r.region.initial_winning;
    };
    CHECK(win(WinMode::AlmostSure));
    CHECK(win(WinMode::Positive));
    CHECK_FALSE(win(WinMode::Sure));
    const SolveResult r = solve_pomdp(m, obj, WinMode::AlmostSure);
    const auto chain = oracle::check_witness_chain(m, obj.target, r.region.witness, true);
    CHECK(chain.complete);
    CHECK(chain.almost_sure);
    const SolveResult pos = solve_pomdp(m, obj, WinMode::Positive);
    CHECK(pos.region.action_word == std::vector<int>{0});
  }

  TEST_CASE("almost-sure reach and Buchi on small POMDPs match exhaustive strategy search") {
    std::mt19937_64 rng(41);
    int wins[2] = {0, 0}, total = 0;
    for (int k = 0; k < 60; ++k) {
      const Pomdp m = fx::sparse_pomdp(rng, 2 + k % 2, 2);
      const std::vector<bool> target = fx::random_set(rng, m.num_states());
      for (bool reach : {true, false}) {
        Objective obj{reach ? ObjectiveKind::Reach : ObjectiveKind::Buchi, target, {}};
        const SolveResult r = solve_pomdp(m, obj, WinMode::AlmostSure);
        REQUIRE(r.supported);
        INFO("instance ", k, reach ? " reach" : " buchi");
        REQUIRE(r.region.initial_winning == oracle::exists_almost_sure_strategy(m, target, reach));
        if (r.region.initial_winning) {
          const auto chain = oracle::check_witness_chain(m, target, r.region.witness, reach);
          REQUIRE(chain.complete);
          REQUIRE(chain.almost_sure);
          ++wins[reach];
        }
        ++total;
      }
    }
    CHECK(wins[0] > 0);
    CHECK(wins[1] > 0);
    CHECK(wins[0] + wins[1] < total);
  }

  TEST_CASE("almost-sure Buchi with full observation matches the MDP fixpoint") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 80; ++k) {
      const Pomdp m = fx::sparse_pomdp(rng, 2 + k % 4, 2, true);
      const std::vector<bool> target = fx::random_set(rng, m.num_states());
      const SolveResult r = solve_pomdp(m, Objective{ObjectiveKind::Buchi, target, {}}, WinMode::AlmostSure);
      REQUIRE(r.region.initial_winning == oracle::mdp_almost_sure_buchi(m, target));
    }
  }

  TEST_CASE("positive reach is support reachability, with a valid action word") {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 80; ++k) {
      const Pomdp m = fx::sparse_pomdp(rng, 2 + k % 4, 2);
      const std::vector<bool> target = fx::random_set(rng, m.num_states());
      const SolveResult r = solve_pomdp(m, Objective{ObjectiveKind::Reach, target, {}}, WinMode::Positive);
      REQUIRE(r.region.initial_winning == oracle::support_reachable(m, target));
      if (!r.region.initial_winning || target[m.initial]) continue;
      // Following the word keeps some path alive until a target is hit.
      std::set<int> cur{m.initial};
      bool hit = false;
      for (int a : r.region.action_word) {
        std::set<int> next;
        for (int s : cur) {
          for (const auto& [t, p] : m.delta[s][a]) next.insert(t);
        }
        cur = next;
        for (int s : cur) hit = hit || target[s];
      }
      REQUIRE(hit);
    }
  }

  TEST_CASE("the qualitative modes are ordered") {
    std::mt19937_64 rng(44);
    for (int k = 0; k < 60; ++k) {
      const Pomdp m = fx::sparse_pomdp(rng, 2 + k % 3, 2);
      const std::vector<bool> target = fx::random_set(rng, m.num_states());
      for (auto kind : {ObjectiveKind::Reach, ObjectiveKind::Safe}) {
        const Objective obj{kind, target, {}};
        const bool sure = solve_pomdp(m, obj, WinMode::Sure).region.initial_winning;
        const bool almost = solve_pomdp(m, obj, WinMode::AlmostSure).region.initial_winning;
        const bool pos = solve_pomdp(m, obj, WinMode::Positive).region.initial_winning;
        REQUIRE((!sure || almost));
        REQUIRE((!almost || pos));
        if (kind == ObjectiveKind::Safe) REQUIRE(sure == almost);
      }
    }
  }

  TEST_CASE("with full observation, sure winning is the perfect-information parity game") {
    std::mt19937_64 rng(45);
    for (int k = 0; k < 120; ++k) {
      const PartialObsGame h = sparse_pog(rng, 2 + k % 3, 2 + k % 2, true);
      REQUIRE(validate_pog(h).empty());
      for (auto kind : {ObjectiveKind::Reach, ObjectiveKind::Safe, ObjectiveKind::Buchi, ObjectiveKind::CoBuchi,
                        ObjectiveKind::Parity}) {
        const StateObjective obj = random_state_objective(rng, kind, h.num_states());
        INFO("instance ", k, " ", std::string(objective_name(kind)));
        REQUIRE(sure_winning(h, obj).initial_winning == oracle::perfect_info_sure(h, obj));
      }
    }
  }

  TEST_CASE("with full observation, positive safety is the attractor to sure safety") {
    std::mt19937_64 rng(46);
    int wins = 0;
    for (int k = 0; k < 150; ++k) {
      const PartialObsGame h = sparse_pog(rng, 2 + k % 3, 2 + k % 2, true);
      std::vector<bool> safe(h.num_states());
      for (int s = 0; s < h.num_states(); ++s) safe[s] = rng() % 4 != 0;
      const bool got = positive_safety(h, safe).initial_winning;
      REQUIRE(got == oracle::perfect_info_positive_safety(h, safe));
      wins += got;
    }
    CHECK(wins > 0);
    CHECK(wins < 150);
  }

  TEST_CASE("breakpoint and Safra trackers agree on Buchi") {
    std::mt19937_64 rng(47);
    for (int k = 0; k < 120; ++k) {
      const PartialObsGame h = sparse_pog(rng, 2 + k % 3, 2 + k % 2, false);
      const StateObjective obj = random_state_objective(rng, ObjectiveKind::Buchi, h.num_states());
      INFO("instance ", k);
      REQUIRE(sure_winning(h, obj).initial_winning == detail::sure_winning_safra(h, obj).initial_winning);
    }
  }

  TEST_CASE("partial observation never helps Player 1") {
    std::mt19937_64 rng(48);
    for (int k = 0; k < 80; ++k) {
      PartialObsGame h = sparse_pog(rng, 2 + k % 3, 2, false);
      const StateObjective obj = random_state_objective(rng, ObjectiveKind::Parity, h.num_states());
      const bool partial = sure_winning(h, obj).initial_winning;
      h.obs1_blocks = h.obs2_blocks;
      h.index_observations();
      if (partial) REQUIRE(sure_winning(h, obj).initial_winning);
    }
  }

  TEST_CASE("knowledge sets stay inside one observation") {
    std::mt19937_64 rng(49);
    const PartialObsGame h = sparse_pog(rng, 4, 3, false);
    const KnowledgeGame kg = knowledge_construction(h);
    for (std::size_t v = 0; v < kg.sets.size(); ++v) {
      REQUIRE_FALSE(kg.sets[v].empty());
      for (int s : kg.sets[v]) {
        CHECK(h.obs1[s] == kg.observation[v]);
        CHECK(h.owner[s] == kg.level[v]);
      }
    }
  }

  TEST_CASE("sure winning needs a fully informed Player 2") {
    std::mt19937_64 rng(50);
    PartialObsGame h = sparse_pog(rng, 3, 2, false);
    h.obs2_blocks = h.obs1_blocks;
    h.index_observations();
    CHECK_THROWS_AS(sure_winning(h, random_state_objective(rng, ObjectiveKind::Reach, h.num_states())), DomainError);
  }

  TEST_CASE("uncertainty game: noisy observation does not block reachability") {
    const UncertaintyGame g = io::game_from_json(io::read_json_file(std::string(UG_TEST_DATA) + "/noisy_game.json"));
    const Objective& obj = *g.objective;
    for (auto p2 : {ReductionMode::Standard, ReductionMode::AllPowerful}) {
      CHECK(solve_uncertainty_game(g, obj, WinMode::Positive, p2).region.initial_winning);
    }
    CHECK(solve_uncertainty_game(g, obj, WinMode::AlmostSure, ReductionMode::AllPowerful).region.initial_winning);
    const SolveResult std_almost = solve_uncertainty_game(g, obj, WinMode::AlmostSure, ReductionMode::Standard);
    CHECK_FALSE(std_almost.supported);
    CHECK(std_almost.classification.find("2EXPTIME") != std::string::npos);
  }
}
