#include "sqtile/affine_expr.hpp"

#include <algorithm>

#include "sqtile/errors.hpp"

namespace sqtile {

AffineExpr AffineExpr::variable(VarId v, Rational coeff) {
  AffineExpr e;
  if (!coeff.is_zero()) e.terms_.push_back({v, std::move(coeff)});
  return e;
}

Rational AffineExpr::coeff(VarId v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const Term& t, VarId id) { return t.var < id; });
  return it != terms_.end() && it->var == v ? it->coeff : Rational();
}

bool AffineExpr::mentions(VarId v) const {
  return std::binary_search(terms_.begin(), terms_.end(), Term{v, {}},
                            [](const Term& a, const Term& b) { return a.var < b.var; });
}

AffineExpr AffineExpr::operator-() const {
  AffineExpr out;
  out.constant_ = -constant_;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.var, -t.coeff});
  return out;
}

AffineExpr& AffineExpr::add_scaled(const AffineExpr& other, const Rational& k) {
  if (k.is_zero()) return *this;
  constant_ += other.constant_ * k;
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->var < b->var)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->var < a->var) {
      merged.push_back({b->var, b->coeff * k});
      ++b;
    } else {
      Rational c = a->coeff + b->coeff * k;
      if (!c.is_zero()) merged.push_back({a->var, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& rhs) { return add_scaled(rhs, 1); }
AffineExpr& AffineExpr::operator-=(const AffineExpr& rhs) { return add_scaled(rhs, -1); }

AffineExpr& AffineExpr::operator*=(const Rational& k) {
  if (k.is_zero()) {
    constant_ = Rational();
    terms_.clear();
    return *this;
  }
  constant_ *= k;
  for (auto& t : terms_) t.coeff *= k;
  return *this;
}

AffineExpr AffineExpr::substitute(VarId v, const AffineExpr& replacement) const {
  const Rational k = coeff(v);
  if (k.is_zero()) return *this;
  AffineExpr out;
  out.constant_ = constant_;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    if (t.var != v) out.terms_.push_back(t);
  out.add_scaled(replacement, k);
  return out;
}

Rational AffineExpr::eval(const Assignment& values) const {
  Rational acc = constant_;
  for (const auto& t : terms_) {
    auto it = values.find(t.var);
    if (it == values.end()) throw UnboundVariableError("unbound variable s" + std::to_string(t.var));
    acc += t.coeff * it->second;
  }
  return acc;
}

Rational AffineExpr::eval(std::span<const std::optional<Rational>> values) const {
  Rational acc = constant_;
  for (const auto& t : terms_) {
    if (t.var < 0 || static_cast<std::size_t>(t.var) >= values.size() || !values[t.var]) {
      throw UnboundVariableError("unbound variable s" + std::to_string(t.var));
    }
    acc += t.coeff * *values[t.var];
  }
  return acc;
}

std::string AffineExpr::to_string() const {
  std::string out = constant_.is_zero() ? std::string() : constant_.to_string();
  for (const auto& t : terms_) {
    const bool neg = t.coeff.sign() < 0;
    const Rational mag = t.coeff.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "s" + std::to_string(t.var);
  }
  return out.empty() ? "0" : out;
}

}  // namespace sqtile
