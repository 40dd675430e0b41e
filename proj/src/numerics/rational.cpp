#include "sqtile/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "sqtile/errors.hpp"

namespace sqtile {
namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

u128 uabs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

// gcd(v, g) for a 128-bit v and a 64-bit g > 0.
std::uint64_t gcd_mixed(i128 v, std::uint64_t g) {
  const auto r = static_cast<std::uint64_t>(uabs128(v) % g);
  return std::gcd(r, g);
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 u = uabs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

mpq_class small_to_mpq(std::int64_t n, std::int64_t d) {
  mpq_class q;
  mpz_set_si(q.get_num_mpz_t(), n);
  mpz_set_si(q.get_den_mpz_t(), d);
  return q;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (num == std::numeric_limits<std::int64_t>::min() ||
      den == std::numeric_limits<std::int64_t>::min()) {
    mpq_class q = small_to_mpq(num, 1) / small_to_mpq(den, 1);
    q.canonicalize();
    *this = from_normalized_mpq(std::move(q));
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = static_cast<std::int64_t>(std::gcd(uabs(num), static_cast<std::uint64_t>(den)));
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::from_normalized_mpq(mpq_class q) {
  Rational r;
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    const long n = mpz_get_si(q.get_num_mpz_t());
    const long d = mpz_get_si(q.get_den_mpz_t());
    if (n != std::numeric_limits<long>::min()) {
      r.num_ = n;
      r.den_ = d;
      return r;
    }
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return from_normalized_mpq(std::move(c));
}

Rational Rational::from_integers(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return from_normalized_mpq(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&](const char* why) -> ParseError {
    return ParseError("non-canonical rational \"" + std::string(text) + "\": " + why);
  };
  auto valid_digits = [](std::string_view d) {
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return d.size() == 1 || d.front() != '0';
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!valid_digits(den)) throw fail("bad denominator");
  }
  std::string_view mag = num;
  const bool negative = !mag.empty() && mag.front() == '-';
  if (negative) mag.remove_prefix(1);
  if (!valid_digits(mag)) throw fail("bad numerator");
  if (negative && mag == "0") throw fail("negative zero");

  mpz_class n{std::string(num)};
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
  if (!den.empty()) {
    if (d <= 1) throw fail("denominator must exceed 1");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) throw fail("not in lowest terms");
  }
  return from_integers(n, d);
}

mpz_class Rational::numerator() const {
  if (big_) return big_->get_num();
  return mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  if (big_) return big_->get_den();
  return mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const { return big_ ? *big_ : small_to_mpq(num_, den_); }

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const { return Rational(1) / *this; }

double Rational::to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / den_; }

long double Rational::to_long_double() const {
  if (!big_) return static_cast<long double>(num_) / static_cast<long double>(den_);
  // Two doubles carry more than the 64 mantissa bits of x87 long double.
  mpf_class f(big_->get_num(), 256);
  f /= mpf_class(big_->get_den(), 256);
  const double hi = f.get_d();
  const mpf_class rest = f - mpf_class(hi, 256);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const noexcept {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  const auto h1 = std::hash<std::int64_t>{}(num_);
  const auto h2 = std::hash<std::int64_t>{}(den_);
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational Rational::operator-() const {
  if (big_) return from_normalized_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    const std::uint64_t g =
        std::gcd(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_));
    const std::int64_t ad = a.den_ / static_cast<std::int64_t>(g);
    const std::int64_t bd = b.den_ / static_cast<std::int64_t>(g);
    const i128 t = static_cast<i128>(a.num_) * bd + static_cast<i128>(b.num_) * ad;
    if (t == 0) return Rational();
    const std::uint64_t g2 = g == 1 ? 1 : gcd_mixed(t, g);
    const i128 num = t / static_cast<i128>(g2);
    const i128 den = static_cast<i128>(ad) * (b.den_ / static_cast<std::int64_t>(g2));
    if (fits(num) && fits(den)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(num);
      r.den_ = static_cast<std::int64_t>(den);
      return r;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    return Rational::from_normalized_mpq(std::move(q));
  }
  return Rational::from_normalized_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    const auto g1 = static_cast<std::int64_t>(std::gcd(uabs(a.num_), static_cast<std::uint64_t>(b.den_)));
    const auto g2 = static_cast<std::int64_t>(std::gcd(uabs(b.num_), static_cast<std::uint64_t>(a.den_)));
    const i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    const i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (fits(num) && fits(den)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(num);
      r.den_ = static_cast<std::int64_t>(den);
      return r;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    return Rational::from_normalized_mpq(std::move(q));
  }
  return Rational::from_normalized_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw DomainError("division by zero rational");
  if (!b.big_) {
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
  }
  return Rational::from_normalized_mpq(a.to_mpq() / b.to_mpq());
}

Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical representation: a spilled value never fits inline
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace sqtile
