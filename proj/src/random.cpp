#include "ug/random.hpp"

#include <algorithm>
#include <map>

#include "ug/measure.hpp"

namespace ug {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t hash_key(std::uint64_t seed, const std::vector<int>& key) {
  std::uint64_t h = splitmix64(seed ^ 0x5bd1e995ull);
  for (int x : key) h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(x) + 1));
  return splitmix64(h ^ key.size());
}

Dist random_dist(std::mt19937_64& rng, int n, int max_den) {
  const int d = std::uniform_int_distribution<int>(1, max_den)(rng);
  std::vector<int> cuts{0, d};
  for (int k = 0; k + 1 < n; ++k) cuts.push_back(std::uniform_int_distribution<int>(0, d)(rng));
  std::sort(cuts.begin(), cuts.end());
  std::map<int, Rational> w;
  for (int k = 0; k < n; ++k) {
    const int part = cuts[k + 1] - cuts[k];
    if (part > 0) {
      Rational q(part, d);
      q.canonicalize();
      w[k] = q;
    }
  }
  return Dist(w);
}

Dist hashed_dist(std::uint64_t seed, const std::vector<int>& key, int n, int max_den) {
  std::mt19937_64 rng(hash_key(seed, key));
  return random_dist(rng, n, max_den);
}

UncertaintyGame random_game(std::mt19937_64& rng, const RandomGameParams& p) {
  UncertaintyGame g;
  const int n = std::uniform_int_distribution<int>(p.min_locations, p.max_locations)(rng);
  for (int l = 0; l < n; ++l) g.locations.push_back("l" + std::to_string(l));
  for (int i = 0; i < p.inputs; ++i) g.inputs.push_back(std::string(1, static_cast<char>('a' + i)));
  for (int o = 0; o < p.outputs; ++o) g.outputs.push_back(std::string(1, static_cast<char>('p' + o)));
  g.resize_tables();
  for (auto& d : g.delta) d = random_dist(rng, n, p.max_den);
  for (auto& d : g.un) d = random_dist(rng, n, p.max_den);
  g.initial = 0;
  return g;
}

Objective random_objective(std::mt19937_64& rng, ObjectiveKind kind, int n, int max_priority) {
  Objective o;
  o.kind = kind;
  if (kind == ObjectiveKind::Parity) {
    for (int l = 0; l < n; ++l) o.priority.push_back(std::uniform_int_distribution<int>(0, max_priority)(rng));
  } else {
    for (int l = 0; l < n; ++l) o.target.push_back(std::uniform_int_distribution<int>(0, 1)(rng) == 1);
  }
  return o;
}

Pomdp random_pomdp(std::mt19937_64& rng, const RandomPomdpParams& p) {
  Pomdp m;
  const int n = std::uniform_int_distribution<int>(p.min_states, p.max_states)(rng);
  for (int s = 0; s < n; ++s) m.states.push_back("s" + std::to_string(s));
  for (int a = 0; a < p.actions; ++a) m.actions.push_back(std::string(1, static_cast<char>('a' + a)));
  m.delta.assign(n, {});
  for (int s = 0; s < n; ++s) {
    for (int a = 0; a < p.actions; ++a) m.delta[s].push_back(random_dist(rng, n, p.max_den));
  }
  // Random partition: each state joins an existing block or opens a new one.
  for (int s = 0; s < n; ++s) {
    const int b = std::uniform_int_distribution<int>(0, static_cast<int>(m.blocks.size()))(rng);
    if (b == static_cast<int>(m.blocks.size())) m.blocks.emplace_back();
    m.blocks[b].push_back(s);
  }
  m.initial = 0;
  m.index_observations();
  return m;
}

namespace {

std::vector<int> letters_of(const PrefixG& p) {
  std::vector<int> k;
  for (int j = 0; j < p.steps(); ++j) {
    k.push_back(p.in(j));
    k.push_back(p.out(j));
  }
  return k;
}

std::vector<int> shaped_key(const PrefixG& p, StrategyShape shape) {
  switch (shape) {
    case StrategyShape::General:
      return p.seq;
    case StrategyShape::CurrentObservation: {
      auto k = letters_of(p);
      k.push_back(p.last());
      return k;
    }
    case StrategyShape::Blind:
      return letters_of(p);
  }
  return p.seq;
}

}  // namespace

StrategyG1 random_strategy_g1(const UncertaintyGame& g, int depth, StrategyShape shape, std::uint64_t seed) {
  StrategyG1 a;
  a.depth = depth;
  std::function<void(const PrefixG&)> rec = [&](const PrefixG& p) {
    if (p.steps() >= depth) return;
    a.set(p, hashed_dist(seed, shaped_key(p, shape), g.num_inputs()));
    for (int i = 0; i < g.num_inputs(); ++i) {
      for (int o = 0; o < g.num_outputs(); ++o) {
        for (int l = 0; l < g.num_locations(); ++l) rec(p.extended(i, o, l));
      }
    }
  };
  for (int l = 0; l < g.num_locations(); ++l) rec(PrefixG(l));
  return a;
}

StrategyG2 random_strategy_g2(const UncertaintyGame& g, int depth, Player2Variant variant, StrategyShape shape,
                              std::uint64_t seed) {
  StrategyG2 b;
  b.depth = depth;
  b.variant = variant;
  const int m = g.num_outputs();
  std::function<void(const PrefixG&)> rec = [&](const PrefixG& truth) {
    if (truth.steps() >= depth) return;
    for (int i = 0; i < g.num_inputs(); ++i) {
      std::vector<int> base = truth.seq;
      base.push_back(i);
      if (variant == Player2Variant::Ordinary) {
        b.set(truth, i, hashed_dist(seed, base, m));
      } else {
        for (const auto& [obs, w] : observation_support(g, truth)) {
          std::vector<int> key = base;
          key.push_back(-1);
          const auto tail = shape == StrategyShape::Blind ? std::vector<int>{} : shaped_key(obs, shape);
          key.insert(key.end(), tail.begin(), tail.end());
          b.set(truth, obs, i, hashed_dist(seed, key, m));
        }
      }
      for (int o = 0; o < m; ++o) {
        for (const auto& [l, p] : g.Delta(truth.last(), i, o)) rec(truth.extended(i, o, l));
      }
    }
  };
  rec(PrefixG(g.initial));
  return b;
}

}  // namespace ug
