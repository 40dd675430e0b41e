#include "sqtile/constraint_store.hpp"

#include <algorithm>
#include <utility>

namespace sqtile {
namespace {

bool satisfied(const Rational& value, bool strict) {
  return strict ? value.sign() > 0 : value.sign() >= 0;
}

bool same_linear_part(const AffineExpr& a, const AffineExpr& b) {
  return std::ranges::equal(a.terms(), b.terms());
}

// Scale by a positive factor so the first coefficient is +1 or -1.
AffineExpr normalized(AffineExpr e) {
  if (e.is_constant()) return e;
  const Rational lead = e.terms().front().coeff.abs();
  if (lead != Rational(1)) e *= lead.reciprocal();
  return e;
}

}  // namespace

const char* to_string(Sign s) {
  switch (s) {
    case Sign::kNegative: return "negative";
    case Sign::kZero: return "zero";
    case Sign::kPositive: return "positive";
    case Sign::kUnknown: return "unknown";
    case Sign::kInconsistent: return "inconsistent";
  }
  return "?";
}

ConstraintStore::ConstraintStore(int num_vars) : subst_(static_cast<std::size_t>(num_vars)) {
  witness_ = Witness{std::vector<std::optional<Rational>>(subst_.size(), Rational())};
}

int ConstraintStore::free_count() const {
  return static_cast<int>(std::count_if(subst_.begin(), subst_.end(),
                                        [](const auto& s) { return !s.has_value(); }));
}

AffineExpr ConstraintStore::reduce(const AffineExpr& e) const {
  bool touched = false;
  for (const auto& t : e.terms()) {
    if (subst_[t.var]) {
      touched = true;
      break;
    }
  }
  if (!touched) return e;
  AffineExpr out(e.constant());
  for (const auto& t : e.terms()) {
    if (subst_[t.var]) {
      out.add_scaled(*subst_[t.var], t.coeff);
    } else {
      out.add_scaled(AffineExpr::variable(t.var), t.coeff);
    }
  }
  return out;
}

bool ConstraintStore::witness_satisfies(const AffineExpr& e, bool strict) const {
  return witness_ && satisfied(e.eval(witness_->values), strict);
}

ConstraintStore::Status ConstraintStore::add_equality(const AffineExpr& e, Elimination* elim) {
  if (elim) elim->var = -1;
  if (inconsistent_) return Status::kInconsistent;
  const AffineExpr r = reduce(e);
  if (r.is_constant()) {
    if (r.constant().is_zero()) return Status::kOk;
    inconsistent_ = true;
    return Status::kInconsistent;
  }
  const VarId v = r.max_var();
  const Rational k = r.coeff(v);
  AffineExpr repl = r - AffineExpr::variable(v, k);
  repl *= -k.reciprocal();

  if (witness_) {
    if (r.eval(witness_->values).is_zero()) {
      witness_->values[v].reset();
    } else {
      witness_.reset();
    }
  }
  for (auto& s : subst_)
    if (s && s->mentions(v)) s = s->substitute(v, repl);
  subst_[v] = repl;

  std::vector<Inequality> old;
  old.swap(ineqs_);
  for (auto& q : old) {
    if (!q.expr.mentions(v)) {
      ineqs_.push_back(std::move(q));
      continue;
    }
    if (add_inequality(q.expr.substitute(v, repl), q.strict) == Status::kInconsistent) {
      return Status::kInconsistent;
    }
  }
  if (elim) {
    elim->var = v;
    elim->replacement = std::move(repl);
  }
  return Status::kOk;
}

ConstraintStore::Status ConstraintStore::add_inequality(const AffineExpr& e, bool strict) {
  if (inconsistent_) return Status::kInconsistent;
  AffineExpr r = normalized(reduce(e));
  if (r.is_constant()) {
    if (satisfied(r.constant(), strict)) return Status::kOk;
    inconsistent_ = true;
    return Status::kInconsistent;
  }
  if (witness_ && !witness_satisfies(r, strict)) witness_.reset();
  for (auto& q : ineqs_) {
    if (!same_linear_part(q.expr, r)) continue;
    // Same direction: keep the tighter bound (smaller constant).
    const auto order = r.constant() <=> q.expr.constant();
    if (order < 0) {
      q.expr = std::move(r);
      q.strict = strict;
    } else if (order == 0) {
      q.strict = q.strict || strict;
    }
    return Status::kOk;
  }
  ineqs_.push_back({std::move(r), strict});
  return Status::kOk;
}

std::vector<int> ConstraintStore::free_columns(int* count) const {
  std::vector<int> col(subst_.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < subst_.size(); ++v)
    if (!subst_[v]) col[v] = next++;
  *count = next;
  return col;
}

std::optional<std::vector<std::optional<Rational>>> ConstraintStore::solve_strict() const {
  if (inconsistent_) return std::nullopt;
  int k = 0;
  const auto col = free_columns(&k);
  const int tau = k;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  a.reserve(ineqs_.size() + 1);
  for (const auto& q : ineqs_) {
    std::vector<Rational> row(k + 1);
    for (const auto& t : q.expr.terms()) row[col[t.var]] = -t.coeff;
    if (q.strict) row[tau] = Rational(1);
    a.push_back(std::move(row));
    b.push_back(q.expr.constant());
  }
  std::vector<Rational> cap(k + 1);
  cap[tau] = Rational(1);
  a.push_back(std::move(cap));
  b.push_back(Rational(1));
  std::vector<Rational> c(k + 1);
  c[tau] = Rational(1);

  const DenseLpResult res = solve_dense_lp(std::move(a), std::move(b), std::move(c));
  if (res.status != LpResult::Status::kOptimal || res.value.sign() <= 0) return std::nullopt;
  std::vector<std::optional<Rational>> point(subst_.size());
  for (std::size_t v = 0; v < subst_.size(); ++v)
    if (col[v] >= 0) point[v] = res.x[col[v]];
  return point;
}

bool ConstraintStore::feasible() {
  if (inconsistent_) return false;
  if (witness_) return true;
  auto point = solve_strict();
  if (!point) return false;
  witness_ = Witness{std::move(*point)};
  return true;
}

std::optional<std::vector<std::optional<Rational>>> ConstraintStore::strict_point() const {
  if (witness_) return witness_->values;
  return solve_strict();
}

bool ConstraintStore::closure_feasible() const {
  if (inconsistent_) return false;
  return maximize(AffineExpr()).status != LpResult::Status::kInfeasible;
}

LpResult ConstraintStore::maximize(const AffineExpr& e) const {
  LpResult out;
  if (inconsistent_) return out;
  const AffineExpr obj = reduce(e);
  int k = 0;
  const auto col = free_columns(&k);
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  a.reserve(ineqs_.size());
  for (const auto& q : ineqs_) {
    std::vector<Rational> row(k);
    for (const auto& t : q.expr.terms()) row[col[t.var]] = -t.coeff;
    a.push_back(std::move(row));
    b.push_back(q.expr.constant());
  }
  std::vector<Rational> c(k);
  for (const auto& t : obj.terms()) c[col[t.var]] = t.coeff;

  const DenseLpResult res = solve_dense_lp(std::move(a), std::move(b), std::move(c));
  out.status = res.status;
  if (!out.optimal()) return out;
  out.value = res.value + obj.constant();
  for (std::size_t v = 0; v < subst_.size(); ++v)
    if (col[v] >= 0) out.vertex.emplace(static_cast<VarId>(v), res.x[col[v]]);
  return out;
}

Sign ConstraintStore::sign_of(const AffineExpr& e) const {
  ConstraintStore base = *this;
  if (!base.feasible()) return Sign::kInconsistent;
  const AffineExpr r = reduce(e);
  if (r.is_constant()) {
    const int s = r.constant().sign();
    return s < 0 ? Sign::kNegative : s > 0 ? Sign::kPositive : Sign::kZero;
  }
  int consistent = 0;
  Sign last = Sign::kUnknown;
  auto probe = [&](Sign s) {
    ConstraintStore child = base;
    const Status st = s == Sign::kZero      ? child.add_equality(r)
                      : s == Sign::kPositive ? child.add_inequality(r, true)
                                             : child.add_inequality(-r, true);
    if (st == Status::kOk && child.feasible()) {
      ++consistent;
      last = s;
    }
  };
  probe(Sign::kPositive);
  probe(Sign::kNegative);
  probe(Sign::kZero);
  return consistent == 1 ? last : Sign::kUnknown;
}

std::vector<std::optional<Rational>> ConstraintStore::complete(
    std::vector<std::optional<Rational>> free) const {
  free.resize(subst_.size());
  for (std::size_t v = 0; v < subst_.size(); ++v)
    if (subst_[v]) free[v] = subst_[v]->eval(free);
  return free;
}

int ConstraintStore::closure_dimension() const {
  ConstraintStore work = *this;
  for (auto& q : work.ineqs_) q.strict = false;
  work.witness_.reset();
  if (!work.closure_feasible()) return -1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& q : work.ineqs_) {
      const LpResult top = work.maximize(q.expr);
      if (top.optimal() && top.value.is_zero()) {
        const AffineExpr implicit = q.expr;
        if (work.add_equality(implicit) == Status::kInconsistent) return -1;
        changed = true;
        break;
      }
    }
  }
  return work.free_count();
}

}  // namespace sqtile
