#include <doctest.h>

#include <sstream>

#include "sqtile/errors.hpp"
#include "sqtile/rational.hpp"

using sqtile::Rational;

TEST_CASE("rational comparisons") {
  CHECK(Rational(13, 5) < Rational(8, 3));
  CHECK((Rational(5, 12) <=> Rational(5, 12)) == std::strong_ordering::equal);
  CHECK(Rational(2, 5) < Rational(5, 12));
  CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("rational normal form") {
  Rational r(6, -4);
  CHECK(r.to_string() == "-3/2");
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, -7).to_string() == "0");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational(10, 5).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), sqtile::DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), sqtile::DomainError);
}

TEST_CASE("rational arithmetic crosses the 64-bit boundary") {
  const Rational big(INT64_MAX, 3);
  const Rational sq = big * big;
  CHECK_FALSE(sq.is_inline());
  CHECK(sq.to_mpq() == mpq_class(mpz_class(INT64_MAX) * INT64_MAX, 9));
  // Dividing back demotes to the inline form.
  const Rational back = sq / big;
  CHECK(back.is_inline());
  CHECK(back == big);

  const Rational min64(INT64_MIN, 1);
  CHECK(min64.to_string() == "-9223372036854775808");
  CHECK((-min64).to_string() == "9223372036854775808");
  CHECK((min64 / Rational(-1)).to_mpq() == mpq_class(mpz_class("9223372036854775808")));
  CHECK(Rational(INT64_MIN, INT64_MIN) == Rational(1));
}

TEST_CASE("rational parse accepts only canonical text") {
  CHECK(Rational::parse("13/5") == Rational(13, 5));
  CHECK(Rational::parse("-3/5") == Rational(-3, 5));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("123456789012345678901234567890").numerator() ==
        mpz_class("123456789012345678901234567890"));
  for (const char* bad : {"", "-", "1/", "/2", "2/4", "3/1", "03/5", "-0", "1/-2", "+1", "1.5", " 1", "1/0", "0/1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), sqtile::ParseError);
  }
}

TEST_CASE("rational conversions") {
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3));
  CHECK(static_cast<double>(Rational(2, 3).to_long_double()) == doctest::Approx(2.0 / 3));
  std::ostringstream os;
  os << Rational(-7, 21);
  CHECK(os.str() == "-1/3");
  CHECK(Rational(-7, 3).abs() == Rational(7, 3));
  CHECK(Rational(-7, 3).reciprocal() == Rational(-3, 7));
  CHECK(std::hash<Rational>{}(Rational(2, 4)) == std::hash<Rational>{}(Rational(1, 2)));
}
