#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "sqtile/rational.hpp"

namespace sqtile {

// Square-free kernel: returns (k, d) with m = k^2 * d and d square-free.
// Throws DomainError for m < 0 and ResourceGuardError when m is too large to
// factor by trial division (above 10^18).
struct SquareFreeSplit {
  mpz_class outer;
  std::int64_t kernel;
};
SquareFreeSplit square_free_split(const mpz_class& m);

// Exact element a + b*sqrt(d) of a real quadratic field. d is square-free; a
// purely rational value is stored with b = 0 and d = 0.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a);  // NOLINT: implicit
  template <std::signed_integral I>
  QuadExt(I a) : QuadExt(Rational(a)) {}  // NOLINT: implicit
  // d may be any nonnegative integer; square factors are pulled into b.
  QuadExt(Rational a, Rational b, std::int64_t d);

  // Exact square root of a nonnegative rational.
  static QuadExt sqrt_of(const Rational& q);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }

  int sign() const;
  long double to_long_double() const;
  // "a", "b*sqrt(d)" or "a + b*sqrt(d)" with p/q coefficients.
  std::string to_string() const;

  QuadExt operator-() const;
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);

  friend bool operator==(const QuadExt& x, const QuadExt& y);
  // Throws UnsupportedFieldError when both sides carry different radicands.
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

 private:
  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

// Exact ordering of two values whose radicands may differ; reduces to a
// single-radicand comparison by squaring with sign tracking.
std::strong_ordering compare_mixed(const QuadExt& x, const QuadExt& y);

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

}  // namespace sqtile
