#include "sqtile/quad_ext.hpp"

#include <cmath>
#include <cstdint>
#include <ostream>

#include "sqtile/errors.hpp"

namespace sqtile {
namespace {

std::strong_ordering to_ordering(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t shared_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational() || x.d() == y.d()) return x.d();
  throw UnsupportedFieldError("values lie in different quadratic fields: sqrt(" +
                              std::to_string(x.d()) + ") and sqrt(" + std::to_string(y.d()) + ")");
}

}  // namespace

SquareFreeSplit square_free_split(const mpz_class& m) {
  if (m < 0) throw DomainError("square-free split of a negative integer");
  if (m == 0) return {0, 0};
  if (m > mpz_class("1000000000000000000")) {
    throw ResourceGuardError("radicand too large to factor: " + m.get_str());
  }
  std::uint64_t rest = mpz_get_ui(m.get_mpz_t());
  std::uint64_t outer = 1;
  std::uint64_t kernel = 1;
  for (std::uint64_t p = 2; p * p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) outer *= p;
    if (e % 2 == 1) kernel *= p;
  }
  // What remains has no prime factor up to its cube root: it is 1, a prime,
  // a product of two distinct primes, or a prime squared.
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(rest)));
  while (root * root > rest) --root;
  while ((root + 1) * (root + 1) <= rest) ++root;
  if (root * root == rest) {
    outer *= root;
  } else {
    kernel *= rest;
  }
  return {mpz_class(static_cast<unsigned long>(outer)), static_cast<std::int64_t>(kernel)};
}

QuadExt::QuadExt(Rational a) : a_(std::move(a)) {}

QuadExt::QuadExt(Rational a, Rational b, std::int64_t d) : a_(std::move(a)) {
  if (d < 0) throw DomainError("negative radicand");
  if (b.is_zero() || d == 0) return;
  auto split = square_free_split(mpz_class(static_cast<long>(d)));
  b *= Rational::from_integers(split.outer, 1);
  if (split.kernel == 1) {
    a_ += b;
    return;
  }
  b_ = std::move(b);
  d_ = split.kernel;
}

QuadExt QuadExt::sqrt_of(const Rational& q) {
  if (q.sign() < 0) throw DomainError("square root of negative rational " + q.to_string());
  if (q.is_zero()) return {};
  // sqrt(p/r) = sqrt(p*r) / r
  const mpz_class p = q.numerator();
  const mpz_class r = q.denominator();
  auto split = square_free_split(p * r);
  const Rational coeff = Rational::from_integers(split.outer, r);
  if (split.kernel == 1) return QuadExt(coeff);
  QuadExt out;
  out.b_ = coeff;
  out.d_ = split.kernel;
  return out;
}

int QuadExt::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa >= 0 && sb > 0) return 1;
  if (sa <= 0 && sb < 0) return -1;
  // Opposite signs: compare a^2 against b^2 d.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  const int mag = (lhs > rhs) - (lhs < rhs);
  return sa > 0 ? mag : -mag;
}

long double QuadExt::to_long_double() const {
  return a_.to_long_double() + b_.to_long_double() * std::sqrt(static_cast<long double>(d_));
}

std::string QuadExt::to_string() const {
  if (is_rational()) return a_.to_string();
  std::string surd = "sqrt(" + std::to_string(d_) + ")";
  auto term = [&](const Rational& c) {
    return c == Rational(1) ? surd : c.to_string() + "*" + surd;
  };
  if (a_.is_zero()) return b_ == Rational(-1) ? "-" + surd : term(b_);
  if (b_.sign() < 0) return a_.to_string() + " - " + term(-b_);
  return a_.to_string() + " + " + term(b_);
}

QuadExt QuadExt::operator-() const {
  QuadExt out;
  out.a_ = -a_;
  out.b_ = -b_;
  out.d_ = d_;
  return out;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  const std::int64_t d = shared_radicand(x, y);
  QuadExt out;
  out.a_ = x.a_ + y.a_;
  out.b_ = x.b_ + y.b_;
  out.d_ = out.b_.is_zero() ? 0 : d;
  return out;
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  const std::int64_t d = shared_radicand(x, y);
  QuadExt out;
  out.a_ = x.a_ * y.a_ + x.b_ * y.b_ * Rational(d);
  out.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  out.d_ = out.b_.is_zero() ? 0 : d;
  return out;
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  const std::int64_t d = shared_radicand(x, y);
  // Multiply through by the conjugate of y.
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
  if (norm.is_zero()) throw DomainError("division by zero in quadratic field");
  QuadExt conj;
  conj.a_ = y.a_;
  conj.b_ = -y.b_;
  conj.d_ = y.d_;
  QuadExt num = x * conj;
  num.a_ /= norm;
  num.b_ /= norm;
  return num;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
  return to_ordering((x - y).sign());
}

std::strong_ordering compare_mixed(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational() || y.is_rational() || x.d() == y.d()) return x <=> y;
  // sign(x - y) = sign(u - v) with u = x.a - y.a + x.b sqrt(dx), v = y.b sqrt(dy)
  const QuadExt u(x.a() - y.a(), x.b(), x.d());
  const QuadExt v(0, y.b(), y.d());
  const int su = u.sign();
  const int sv = v.sign();
  if (su != sv) return to_ordering(su > sv ? 1 : -1);
  if (su == 0) return std::strong_ordering::equal;
  // Same sign: compare squares; u^2 lives in Q(sqrt(dx)), v^2 is rational.
  const int sq = (u * u - QuadExt(v.b() * v.b() * Rational(v.d()))).sign();
  return to_ordering(su > 0 ? sq : -sq);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.to_string(); }

}  // namespace sqtile
