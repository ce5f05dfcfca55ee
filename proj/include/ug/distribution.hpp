#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ug/rational.hpp"

namespace ug {

// Finite distribution over dense integer ids. Entries are kept sorted by id
// with zero weights dropped; negative weights are kept so that validation can
// report them.
class Dist {
 public:
  Dist() = default;
  explicit Dist(const std::map<int, Rational>& weights);

  static Dist dirac(int x);
  static Dist uniform(const std::vector<int>& support);

  Rational operator()(int x) const;
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Rational total() const;
  // Values in [0,1] and exact sum 1.
  bool is_distribution() const;
  std::vector<int> support() const;

  const std::vector<std::pair<int, Rational>>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const Dist& a, const Dist& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<std::pair<int, Rational>> entries_;
};

}  // namespace ug
