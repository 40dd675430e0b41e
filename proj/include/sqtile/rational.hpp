#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sqtile {

// Exact rational number, always in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in a signed 64-bit word are kept
// inline and operated on with 128-bit intermediates; anything larger spills
// into an immutable, shared GMP rational. Results are demoted back to the
// inline form whenever they fit, so equal values always share one
// representation.
class Rational {
 public:
  Rational() noexcept = default;
  template <std::signed_integral I>
  Rational(I value) : Rational(static_cast<std::int64_t>(value), 1) {}  // NOLINT: implicit
  Rational(std::int64_t num, std::int64_t den);

  static Rational from_mpq(const mpq_class& q);
  static Rational from_integers(const mpz_class& num, const mpz_class& den);

  // Accepts only the canonical "p/q" or "p" form: optional leading '-', no
  // leading zeros, q > 1, gcd(p, q) = 1. Throws ParseError otherwise.
  static Rational parse(std::string_view text);

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  bool is_inline() const noexcept { return big_ == nullptr; }
  bool is_zero() const noexcept { return big_ == nullptr && num_ == 0; }
  bool is_integer() const;
  int sign() const noexcept;

  Rational abs() const;
  Rational reciprocal() const;

  double to_double() const;
  long double to_long_double() const;
  std::string to_string() const;
  std::size_t hash() const noexcept;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept;

 private:
  static Rational from_normalized_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace sqtile

template <>
struct std::hash<sqtile::Rational> {
  std::size_t operator()(const sqtile::Rational& r) const noexcept { return r.hash(); }
};
