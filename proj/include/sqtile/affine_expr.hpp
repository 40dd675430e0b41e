#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqtile/rational.hpp"

namespace sqtile {

// Variables are dense small integers handed out in placement order.
using VarId = int;

using Assignment = std::map<VarId, Rational>;

// constant + sum(coeff_i * var_i), terms sorted by variable id with no zero
// coefficients stored.
class AffineExpr {
 public:
  struct Term {
    VarId var;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  AffineExpr() = default;
  AffineExpr(Rational constant) : constant_(std::move(constant)) {}  // NOLINT: implicit
  template <std::signed_integral I>
  AffineExpr(I constant) : constant_(constant) {}  // NOLINT: implicit

  static AffineExpr variable(VarId v, Rational coeff = 1);

  const Rational& constant() const { return constant_; }
  std::span<const Term> terms() const { return terms_; }
  Rational coeff(VarId v) const;
  bool is_constant() const { return terms_.empty(); }
  bool mentions(VarId v) const;
  VarId max_var() const { return terms_.empty() ? -1 : terms_.back().var; }

  AffineExpr operator-() const;
  AffineExpr& operator+=(const AffineExpr& rhs);
  AffineExpr& operator-=(const AffineExpr& rhs);
  AffineExpr& operator*=(const Rational& k);
  friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
  friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
  friend AffineExpr operator*(AffineExpr a, const Rational& k) { return a *= k; }
  friend AffineExpr operator*(const Rational& k, AffineExpr a) { return a *= k; }

  // this + k * other, without materializing k * other.
  AffineExpr& add_scaled(const AffineExpr& other, const Rational& k);

  // Replace every occurrence of v by the given expression.
  AffineExpr substitute(VarId v, const AffineExpr& replacement) const;

  // Throws UnboundVariableError when a mentioned variable is missing.
  Rational eval(const Assignment& values) const;
  // Dense variant: values[v] must be set for every mentioned v.
  Rational eval(std::span<const std::optional<Rational>> values) const;

  // e.g. "1 - s1", "3/5", "1/2 + s0 + 2*s3"
  std::string to_string() const;

  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;

 private:
  Rational constant_;
  std::vector<Term> terms_;
};

}  // namespace sqtile
