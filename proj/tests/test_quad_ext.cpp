#include <doctest.h>

#include "sqtile/errors.hpp"
#include "sqtile/quad_ext.hpp"

using sqtile::QuadExt;
using sqtile::Rational;

namespace {
const QuadExt kAtMost3Value(Rational(8, 5), Rational(2, 5), 6);
}

TEST_CASE("quadext comparisons against rationals") {
  CHECK(kAtMost3Value < QuadExt(Rational(258, 100)));
  CHECK(kAtMost3Value < QuadExt(Rational(13, 5)));
  CHECK(kAtMost3Value > QuadExt(Rational(257, 100)));
  CHECK(QuadExt(Rational(3, 7), Rational(0), 5) == QuadExt(Rational(3, 7)));
}

TEST_CASE("quadext normalizes the radicand") {
  const QuadExt x(Rational(1), Rational(1), 8);  // 1 + sqrt(8) = 1 + 2 sqrt(2)
  CHECK(x.d() == 2);
  CHECK(x.b() == Rational(2));
  const QuadExt y(Rational(1), Rational(3), 9);  // rational
  CHECK(y.is_rational());
  CHECK(y.a() == Rational(10));
  CHECK(QuadExt(Rational(0), Rational(5), 1).is_rational());
  CHECK(QuadExt::sqrt_of(Rational(225, 144)) == QuadExt(Rational(5, 4)));
  CHECK(QuadExt::sqrt_of(Rational(8)).to_string() == "2*sqrt(2)");
  CHECK_THROWS_AS(QuadExt::sqrt_of(Rational(-1)), sqtile::DomainError);
}

TEST_CASE("quadext arithmetic and formatting") {
  const QuadExt s6(Rational(0), Rational(1), 6);
  CHECK(s6 * s6 == QuadExt(6));
  const QuadExt t = (QuadExt(4) + s6) / QuadExt(20);
  CHECK(t.to_string() == "1/5 + 1/20*sqrt(6)");
  CHECK((QuadExt(1) - s6).to_string() == "1 - sqrt(6)");
  CHECK(kAtMost3Value.to_string() == "8/5 + 2/5*sqrt(6)");
  CHECK((QuadExt(1) / (QuadExt(1) + s6)) * (QuadExt(1) + s6) == QuadExt(1));
  CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), sqtile::DomainError);
}

TEST_CASE("quadext mixed radicands") {
  const QuadExt r2(Rational(0), Rational(1), 2);
  const QuadExt r3(Rational(0), Rational(1), 3);
  CHECK_THROWS_AS((void)(r2 < r3), sqtile::UnsupportedFieldError);
  CHECK_THROWS_AS(r2 + r3, sqtile::UnsupportedFieldError);
  CHECK(sqtile::compare_mixed(r2, r3) == std::strong_ordering::less);
  CHECK(sqtile::compare_mixed(QuadExt(Rational(7, 5)), r2) == std::strong_ordering::less);
  CHECK(sqtile::compare_mixed(QuadExt(Rational(1), Rational(1), 2), QuadExt(Rational(0), Rational(1), 6)) ==
        std::strong_ordering::less);  // 1 + 1.414 < 2.449
  CHECK(sqtile::compare_mixed(QuadExt(Rational(3, 2), Rational(1), 2), QuadExt(Rational(0), Rational(1), 6)) ==
        std::strong_ordering::greater);
}

TEST_CASE("square-free split") {
  CHECK(sqtile::square_free_split(72).kernel == 2);
  CHECK(sqtile::square_free_split(72).outer == 6);
  CHECK(sqtile::square_free_split(1).kernel == 1);
  CHECK(sqtile::square_free_split(0).kernel == 0);
  const auto big = sqtile::square_free_split(mpz_class(1000003) * 1000003 * 12);
  CHECK(big.outer == mpz_class(1000003) * 2);
  CHECK(big.kernel == 3);
  CHECK_THROWS_AS(sqtile::square_free_split(mpz_class("1000000000000000001")), sqtile::ResourceGuardError);
  CHECK_THROWS_AS(sqtile::square_free_split(-4), sqtile::DomainError);
}
