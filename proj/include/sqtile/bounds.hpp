#pragma once

#include <cstdint>

#include "sqtile/quad_ext.hpp"
#include "sqtile/rational.hpp"

namespace sqtile {

// Cauchy-Schwarz edge-sum bound: n squares of total area A have side sum at
// most sqrt(n*A). Returned exactly as a surd over the square-free kernel.
QuadExt cs_bound(std::int64_t n, const Rational& area);

// f(t) = alpha + beta*t + sqrt(gamma*t + delta*t^2) on [lo, hi].
struct BoundCurve {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;
  Rational lo;
  Rational hi;

  Rational radicand(const Rational& t) const { return gamma * t + delta * t * t; }
  QuadExt eval(const Rational& t) const;
};

struct CurveMaximum {
  QuadExt t_star;
  QuadExt value;
};

// Exact global maximum of the curve on its domain. Candidates are the two
// endpoints, the zeros of the radicand (where f is not differentiable) and the
// roots of the squared stationarity condition
//   (gamma + 2 delta t)^2 = 4 beta^2 (gamma t + delta t^2)
// that also satisfy the unsquared sign condition. Ties resolve to the least t.
// Throws DomainError when the radicand is negative somewhere on [lo, hi].
CurveMaximum maximize_curve(const BoundCurve& c);

// Area left for five tiles once A, B and B' (sides 1-t, t, t) are placed.
Rational five_tile_residual(const Rational& t);

// Area left for four tiles once A, B, B' and B'' are placed.
Rational four_tile_residual(const Rational& t);

}  // namespace sqtile
