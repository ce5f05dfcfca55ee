#include "ug/measure.hpp"

#include "ug/errors.hpp"

namespace ug {

Rational obs_seq(const UncertaintyGame& g, const PrefixG& truth, const PrefixG& observed) {
  if (!action_matching(truth, observed)) return Rational(0);
  Rational w(1);
  for (int j = 0; j <= truth.steps() && w != 0; ++j) w *= g.Un(truth.loc(j))(observed.loc(j));
  return w;
}

ActMtRange::ActMtRange(const UncertaintyGame& g, const PrefixG& rho) : rho_(rho), num_locations_(g.num_locations()) {}

ActMtRange::iterator::iterator(const ActMtRange* r, bool end) : range_(r), current_(r->rho_), done_(end) {
  if (!done_) {
    for (std::size_t k = 0; k < current_.seq.size(); k += 3) current_.seq[k] = 0;
    done_ = range_->num_locations_ == 0;
  }
}

ActMtRange::iterator& ActMtRange::iterator::operator++() {
  for (int k = static_cast<int>(current_.seq.size()) - 1; k >= 0; k -= 3) {
    if (++current_.seq[k] < range_->num_locations_) return *this;
    current_.seq[k] = 0;
  }
  done_ = true;
  return *this;
}

namespace {

void extend_support(const UncertaintyGame& g, const ObservationSupport& from, int in, int out, int truth_loc,
                    ObservationSupport& to) {
  to.clear();
  for (const auto& [obs, w] : from) {
    for (const auto& [l2, p] : g.Un(truth_loc)) to.emplace_back(obs.extended(in, out, l2), w * p);
  }
}

ObservationSupport initial_support(const UncertaintyGame& g, int l0) {
  ObservationSupport s;
  for (const auto& [l2, p] : g.Un(l0)) s.emplace_back(PrefixG(l2), p);
  return s;
}

void check_ids(const UncertaintyGame& g, const PrefixG& rho) {
  if (!rho.well_formed()) throw DomainError("malformed prefix");
  for (std::size_t k = 0; k < rho.seq.size(); ++k) {
    const int x = rho.seq[k];
    const int bound = k % 3 == 0 ? g.num_locations() : (k % 3 == 1 ? g.num_inputs() : g.num_outputs());
    if (x < 0 || x >= bound) throw DomainError("prefix id out of range");
  }
}

}  // namespace

ObservationSupport observation_support(const UncertaintyGame& g, const PrefixG& truth) {
  ObservationSupport cur = initial_support(g, truth.loc(0)), next;
  for (int j = 0; j < truth.steps(); ++j) {
    extend_support(g, cur, truth.in(j), truth.out(j), truth.loc(j + 1), next);
    cur.swap(next);
  }
  return cur;
}

ConeMeasure::ConeMeasure(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta)
    : g_(g), alpha_(alpha), beta_(beta) {}

Rational ConeMeasure::step_factor(const PrefixG& rho, const ObservationSupport& observed, int in, int out) const {
  Rational sum(0);
  if (beta_.variant == Player2Variant::Ordinary) {
    const Rational b = beta_.at(rho, in)(out);
    if (b == 0) return sum;
    for (const auto& [obs, w] : observed) sum += w * alpha_.at(obs)(in);
    return sum * b;
  }
  for (const auto& [obs, w] : observed) {
    const Rational a = alpha_.at(obs)(in);
    if (a != 0) sum += w * a * beta_.at(rho, obs, in)(out);
  }
  return sum;
}

const ConeMeasure::Node& ConeMeasure::node(const PrefixG& rho) {
  if (auto it = memo_.find(rho); it != memo_.end()) return it->second;
  Node n;
  if (rho.steps() == 0) {
    n.mass = rho.loc(0) == g_.initial ? Rational(1) : Rational(0);
    if (n.mass != 0) n.observed = initial_support(g_, rho.loc(0));
  } else {
    const int k = rho.steps() - 1;
    const PrefixG parent = rho.truncated(k);
    const Node& p = node(parent);
    const int in = rho.in(k), out = rho.out(k), l = rho.last();
    if (p.mass != 0) {
      const Rational d = g_.Delta(parent.last(), in, out)(l);
      if (d != 0) n.mass = p.mass * d * step_factor(parent, p.observed, in, out);
      if (n.mass != 0) extend_support(g_, p.observed, in, out, l, n.observed);
    }
  }
  return memo_.emplace(rho, std::move(n)).first->second;
}

Rational ConeMeasure::cone(const PrefixG& rho) {
  check_ids(g_, rho);
  if (rho.loc(0) != g_.initial) throw DomainError("prefix does not start at the initial location");
  if (rho.steps() > alpha_.depth || rho.steps() > beta_.depth) {
    throw DomainError("prefix with " + std::to_string(rho.steps()) + " steps exceeds strategy depth");
  }
  return node(rho).mass;
}

void ConeMeasure::dfs(const PrefixG& rho, const Rational& mass, const ObservationSupport& observed, int remaining,
                      bool include_zero, const std::function<void(const PrefixG&, const Rational&)>& fn) {
  if (remaining == 0) {
    fn(rho, mass);
    return;
  }
  ObservationSupport next;
  for (int i = 0; i < g_.num_inputs(); ++i) {
    for (int o = 0; o < g_.num_outputs(); ++o) {
      const Rational f = mass == 0 ? Rational(0) : step_factor(rho, observed, i, o);
      if (f == 0 && !include_zero) continue;
      const Dist& d = g_.Delta(rho.last(), i, o);
      for (int l = 0; l < g_.num_locations(); ++l) {
        const Rational child = f == 0 ? Rational(0) : mass * f * d(l);
        if (child == 0 && !include_zero) continue;
        if (child != 0) {
          extend_support(g_, observed, i, o, l, next);
        } else {
          next.clear();
        }
        dfs(rho.extended(i, o, l), child, next, remaining - 1, include_zero, fn);
      }
    }
  }
}

void ConeMeasure::for_each_cone(int steps, bool include_zero,
                                const std::function<void(const PrefixG&, const Rational&)>& fn) {
  if (steps > alpha_.depth || steps > beta_.depth) throw DomainError("cone depth exceeds strategy depth");
  for (int l0 = 0; l0 < g_.num_locations(); ++l0) {
    if (l0 == g_.initial) {
      dfs(PrefixG(l0), Rational(1), initial_support(g_, l0), steps, include_zero, fn);
    } else if (include_zero) {
      dfs(PrefixG(l0), Rational(0), {}, steps, include_zero, fn);
    }
  }
}

Rational cone_prob(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta, const PrefixG& rho) {
  ConeMeasure m(g, alpha, beta);
  return m.cone(rho);
}

Rational event_prob_at_depth(const UncertaintyGame& g, const StrategyG1& alpha, const StrategyG2& beta,
                             const std::function<bool(const PrefixG&)>& pred, int n) {
  ConeMeasure m(g, alpha, beta);
  Rational sum(0);
  m.for_each_cone(n, false, [&](const PrefixG& rho, const Rational& p) {
    if (pred(rho)) sum += p;
  });
  return sum;
}

}  // namespace ug
