#include "sqtile/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

namespace sqtile {
namespace {

// Tableau in dictionary form: basic_i = D[i][n+1] - sum_j D[i][j] x_{N[j]}.
// Column n holds the phase-one artificial (id -1); row m the objective and
// row m+1 the phase-one objective.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>>&& a, std::vector<Rational>&& b,
          const std::vector<Rational>& c)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        basis_(m_),
        nonbasis_(n_ + 1),
        d_(m_ + 2, std::vector<Rational>(n_ + 2)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) d_[i][j] = std::move(a[i][j]);
      basis_[i] = n_ + i;
      d_[i][n_] = Rational(-1);
      d_[i][n_ + 1] = std::move(b[i]);
    }
    for (int j = 0; j < n_; ++j) {
      nonbasis_[j] = j;
      d_[m_][j] = -c[j];
    }
    nonbasis_[n_] = -1;
    d_[m_ + 1][n_] = Rational(1);
  }

  DenseLpResult solve() {
    DenseLpResult out;
    if (m_ > 0) {
      int r = 0;
      for (int i = 1; i < m_; ++i)
        if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
      if (d_[r][n_ + 1].sign() < 0) {
        pivot(r, n_);
        if (!simplex(2) || d_[m_ + 1][n_ + 1].sign() < 0) {
          out.status = LpResult::Status::kInfeasible;
          return out;
        }
        // Drive a zero-level artificial out of the basis when possible.
        for (int i = 0; i < m_; ++i) {
          if (basis_[i] != -1) continue;
          int s = -1;
          for (int j = 0; j <= n_; ++j)
            if (!d_[i][j].is_zero() && (s == -1 || nonbasis_[j] < nonbasis_[s])) s = j;
          if (s != -1) pivot(i, s);
        }
      }
    }
    if (!simplex(1)) {
      out.status = LpResult::Status::kUnbounded;
      return out;
    }
    out.status = LpResult::Status::kOptimal;
    out.value = d_[m_][n_ + 1];
    out.x.assign(n_, Rational());
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= 0 && basis_[i] < n_) out.x[basis_[i]] = d_[i][n_ + 1];
    return out;
  }

 private:
  void pivot(int r, int s) {
    const Rational inv = Rational(1) / d_[r][s];
    auto& row_r = d_[r];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || d_[i][s].is_zero()) continue;
      auto& row_i = d_[i];
      const Rational f = row_i[s] * inv;
      for (int j = 0; j < n_ + 2; ++j) {
        if (j == s || row_r[j].is_zero()) continue;
        row_i[j] -= row_r[j] * f;
      }
      row_i[s] = -f;
    }
    for (int j = 0; j < n_ + 2; ++j)
      if (j != s && !row_r[j].is_zero()) row_r[j] *= inv;
    row_r[s] = inv;
    std::swap(basis_[r], nonbasis_[s]);
  }

  // Bland's rule: least-index improving column, least-index ratio tie-break.
  bool simplex(int phase) {
    const int x = m_ + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasis_[j] == -phase) continue;
        if (d_[x][j].sign() < 0 && (s == -1 || nonbasis_[j] < nonbasis_[s])) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s].sign() <= 0) continue;
        Rational ratio = d_[i][n_ + 1] / d_[i][s];
        if (r == -1 || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  std::vector<int> basis_;
  std::vector<int> nonbasis_;
  std::vector<std::vector<Rational>> d_;
};

}  // namespace

std::uint64_t& thread_lp_counter() {
  thread_local std::uint64_t counter = 0;
  return counter;
}

DenseLpResult solve_dense_lp(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                             std::vector<Rational> c) {
  ++thread_lp_counter();
  Tableau t(std::move(a), std::move(b), c);
  return t.solve();
}

LpResult lp_max(const LinProgram& p) {
  // Column layout: one column per mentioned variable, plus a negative part for
  // each free variable.
  std::map<VarId, int> column;
  auto note = [&](const AffineExpr& e) {
    for (const auto& t : e.terms()) column.emplace(t.var, 0);
  };
  note(p.objective);
  for (const auto& c : p.constraints) note(c.expr);
  for (VarId v : p.free_vars) column.emplace(v, 0);
  int next = 0;
  for (auto& [v, col] : column) col = next++;
  std::map<VarId, int> negative;
  for (VarId v : p.free_vars) negative.emplace(v, next++);
  const int n = next;

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  // expr >= 0  <=>  -linear(expr) <= constant(expr)
  auto push_row = [&](const AffineExpr& e, const Rational& sign) {
    std::vector<Rational> row(n);
    for (const auto& t : e.terms()) {
      row[column.at(t.var)] = -t.coeff * sign;
      if (auto it = negative.find(t.var); it != negative.end()) row[it->second] = t.coeff * sign;
    }
    a.push_back(std::move(row));
    b.push_back(e.constant() * sign);
  };
  for (const auto& c : p.constraints) {
    push_row(c.expr, Rational(1));
    if (c.kind == LinearConstraint::Kind::kEq) push_row(c.expr, Rational(-1));
  }
  std::vector<Rational> obj(n);
  for (const auto& t : p.objective.terms()) {
    obj[column.at(t.var)] = t.coeff;
    if (auto it = negative.find(t.var); it != negative.end()) obj[it->second] = -t.coeff;
  }

  const DenseLpResult dense = solve_dense_lp(std::move(a), std::move(b), std::move(obj));
  LpResult out;
  out.status = dense.status;
  if (!out.optimal()) return out;
  out.value = dense.value + p.objective.constant();
  for (const auto& [v, col] : column) {
    Rational value = dense.x[col];
    if (auto it = negative.find(v); it != negative.end()) value -= dense.x[it->second];
    out.vertex.emplace(v, std::move(value));
  }
  return out;
}

}  // namespace sqtile
