#include <doctest.h>

#include "sqtile/affine_expr.hpp"
#include "sqtile/errors.hpp"

using sqtile::AffineExpr;
using sqtile::Rational;

TEST_CASE("affine evaluation") {
  const AffineExpr s1 = AffineExpr::variable(1);
  const AffineExpr s2 = AffineExpr::variable(2);
  CHECK((AffineExpr(1) - s1).eval(sqtile::Assignment{{1, Rational(3, 5)}}) == Rational(2, 5));
  CHECK(AffineExpr().eval(sqtile::Assignment{}) == Rational(0));
  CHECK((s1 + s2).eval(sqtile::Assignment{{1, Rational(3, 5)}, {2, Rational(2, 5)}}) == Rational(1));
  CHECK_THROWS_AS((s1 + s2).eval(sqtile::Assignment{{1, Rational(1)}}), sqtile::UnboundVariableError);
}

TEST_CASE("affine normal form drops zero terms") {
  const AffineExpr s0 = AffineExpr::variable(0);
  const AffineExpr s3 = AffineExpr::variable(3, 2);
  AffineExpr e = s0 + s3 - s0;
  CHECK(e.terms().size() == 1);
  CHECK(e.coeff(0) == Rational(0));
  CHECK(e.coeff(3) == Rational(2));
  CHECK_FALSE(e.mentions(0));
  CHECK(e.max_var() == 3);
  e *= Rational(0);
  CHECK(e.is_constant());
  CHECK(e == AffineExpr(0));
}

TEST_CASE("affine substitution and formatting") {
  const AffineExpr s0 = AffineExpr::variable(0);
  const AffineExpr s1 = AffineExpr::variable(1);
  const AffineExpr e = AffineExpr(Rational(1, 2)) + s0 + s1 * Rational(2);
  CHECK(e.to_string() == "1/2 + s0 + 2*s1");
  const AffineExpr sub = e.substitute(1, AffineExpr(1) - s0);
  CHECK(sub.to_string() == "5/2 - s0");
  CHECK((AffineExpr(1) - s1).to_string() == "1 - s1");
  CHECK(AffineExpr().to_string() == "0");
  AffineExpr acc = s0;
  acc.add_scaled(s1 - s0, Rational(3));
  CHECK(acc.to_string() == "-2*s0 + 3*s1");
}
