#include "sqtile/bounds.hpp"

#include <optional>
#include <vector>

#include "sqtile/errors.hpp"

namespace sqtile {
namespace {

bool in_domain(const QuadExt& t, const Rational& lo, const Rational& hi) {
  return compare_mixed(t, QuadExt(lo)) >= 0 && compare_mixed(t, QuadExt(hi)) <= 0;
}

void check_radicand(const BoundCurve& c) {
  if (c.lo > c.hi) throw DomainError("curve domain is empty: lo > hi");
  auto bad = [&](const Rational& t) { return c.radicand(t).sign() < 0; };
  if (bad(c.lo) || bad(c.hi)) throw DomainError("curve radicand is negative on the domain");
  // A convex radicand can dip below zero strictly inside the interval.
  if (c.delta.sign() > 0) {
    const Rational vertex = -c.gamma / (Rational(2) * c.delta);
    if (c.lo < vertex && vertex < c.hi && bad(vertex)) {
      throw DomainError("curve radicand is negative on the domain");
    }
  }
}

}  // namespace

QuadExt cs_bound(std::int64_t n, const Rational& area) {
  if (area.sign() < 0) throw DomainError("negative area " + area.to_string());
  if (n <= 0) throw DomainError("cs_bound needs a positive tile count");
  return QuadExt::sqrt_of(Rational(n) * area);
}

QuadExt BoundCurve::eval(const Rational& t) const {
  return QuadExt(alpha + beta * t) + QuadExt::sqrt_of(radicand(t));
}

CurveMaximum maximize_curve(const BoundCurve& c) {
  check_radicand(c);

  struct Candidate {
    QuadExt t;
    QuadExt value;
  };
  std::vector<Candidate> candidates;
  auto add_rational = [&](const Rational& t) {
    if (t < c.lo || t > c.hi) return;
    candidates.push_back({QuadExt(t), c.eval(t)});
  };

  add_rational(c.lo);
  add_rational(c.hi);
  add_rational(Rational(0));
  if (!c.delta.is_zero()) add_rational(-c.gamma / c.delta);

  // Squared stationarity: A t^2 + B t + C = 0.
  const Rational two(2);
  const Rational four(4);
  const Rational shift = c.delta - c.beta * c.beta;
  const Rational qa = four * c.delta * shift;
  const Rational qb = four * c.gamma * shift;
  const Rational qc = c.gamma * c.gamma;

  std::vector<QuadExt> roots;
  if (qa.is_zero()) {
    if (!qb.is_zero()) roots.emplace_back(-qc / qb);
  } else {
    const Rational disc = qb * qb - four * qa * qc;
    if (disc.sign() >= 0) {
      const QuadExt root_disc = QuadExt::sqrt_of(disc);
      const QuadExt denom(two * qa);
      roots.push_back((QuadExt(-qb) + root_disc) / denom);
      if (!disc.is_zero()) roots.push_back((QuadExt(-qb) - root_disc) / denom);
    }
  }

  for (const auto& t : roots) {
    if (!in_domain(t, c.lo, c.hi)) continue;
    const QuadExt slope_term = QuadExt(c.gamma) + QuadExt(two * c.delta) * t;  // gamma + 2 delta t
    const QuadExt q = QuadExt(c.gamma) * t + QuadExt(c.delta) * t * t;
    if (q.sign() <= 0) continue;
    // Unsquared condition: 2 beta sqrt(q) = -(gamma + 2 delta t).
    if (c.beta.is_zero()) {
      if (slope_term.sign() != 0) continue;
    } else if ((-slope_term).sign() != c.beta.sign()) {
      continue;
    }
    QuadExt value;
    if (t.is_rational()) {
      value = c.eval(t.a());
    } else {
      // On the stationary branch sqrt(q) = -(gamma + 2 delta t) / (2 beta).
      value = QuadExt(c.alpha) + QuadExt(c.beta) * t - slope_term / QuadExt(two * c.beta);
    }
    candidates.push_back({t, value});
  }

  std::optional<Candidate> best;
  for (auto& cand : candidates) {
    if (!best) {
      best = cand;
      continue;
    }
    const auto order = compare_mixed(cand.value, best->value);
    if (order > 0 || (order == 0 && compare_mixed(cand.t, best->t) < 0)) best = cand;
  }
  return {best->t, best->value};
}

Rational five_tile_residual(const Rational& t) {
  if (t.sign() < 0 || t > Rational(1, 2)) throw DomainError("residual needs 0 <= t <= 1/2");
  return Rational(2) * t - Rational(3) * t * t;
}

Rational four_tile_residual(const Rational& t) {
  if (t.sign() < 0 || t > Rational(1, 2)) throw DomainError("residual needs 0 <= t <= 1/2");
  return Rational(2) * t - Rational(4) * t * t;
}

}  // namespace sqtile
