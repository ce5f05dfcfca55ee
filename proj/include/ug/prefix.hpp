#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ug {

struct UncertaintyGame;

// Finite history l0 i0 o0 l1 ... ln of a game with probabilistic uncertainty,
// stored flat: seq[3j] is the j-th location, seq[3j+1] and seq[3j+2] are the
// input and output letters of step j.
struct PrefixG {
  std::vector<int> seq;

  PrefixG() = default;
  explicit PrefixG(int l0) : seq{l0} {}
  explicit PrefixG(std::vector<int> s) : seq(std::move(s)) {}

  // Number of steps n; the prefix visits n + 1 locations.
  int steps() const { return static_cast<int>(seq.size() / 3); }
  int loc(int j) const { return seq[3 * j]; }
  int in(int j) const { return seq[3 * j + 1]; }
  int out(int j) const { return seq[3 * j + 2]; }
  int last() const { return seq.back(); }
  bool well_formed() const { return !seq.empty() && seq.size() % 3 == 1; }

  PrefixG extended(int i, int o, int l) const {
    PrefixG p = *this;
    p.seq.push_back(i);
    p.seq.push_back(o);
    p.seq.push_back(l);
    return p;
  }
  PrefixG truncated(int n) const { return PrefixG(std::vector<int>(seq.begin(), seq.begin() + 3 * n + 1)); }

  friend bool operator==(const PrefixG& a, const PrefixG& b) { return a.seq == b.seq; }
  friend bool operator<(const PrefixG& a, const PrefixG& b) { return a.seq < b.seq; }
};

// Same length and identical letters.
bool action_matching(const PrefixG& a, const PrefixG& b);

std::string format_prefix(const UncertaintyGame& g, const PrefixG& p);
std::vector<std::string> prefix_names(const UncertaintyGame& g, const PrefixG& p);
// Parses alternating names; throws DomainError on unknown names or bad shape.
PrefixG parse_prefix(const UncertaintyGame& g, const std::vector<std::string>& names);
PrefixG parse_prefix(const UncertaintyGame& g, const std::string& space_separated);

struct IntSeqHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct PrefixGHash {
  std::size_t operator()(const PrefixG& p) const noexcept { return IntSeqHash{}(p.seq); }
};

}  // namespace ug
