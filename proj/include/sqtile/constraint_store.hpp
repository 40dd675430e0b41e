#pragma once

#include <optional>
#include <vector>

#include "sqtile/affine_expr.hpp"
#include "sqtile/lp.hpp"

namespace sqtile {

enum class Sign { kNegative, kZero, kPositive, kUnknown, kInconsistent };

const char* to_string(Sign s);

// Linear constraints over side-length variables: a triangular substitution
// map for equalities and a list of non-strict / strict inequalities over the
// remaining free variables. Every stored inequality is fully reduced by the
// substitution map.
class ConstraintStore {
 public:
  struct Inequality {
    AffineExpr expr;  // expr >= 0, or expr > 0 when strict
    bool strict = false;
  };

  enum class Status { kOk, kInconsistent };

  // What an equality did: eliminated `var`, now equal to `replacement`.
  struct Elimination {
    VarId var = -1;
    AffineExpr replacement;
  };

  ConstraintStore() = default;
  explicit ConstraintStore(int num_vars);

  int num_vars() const { return static_cast<int>(subst_.size()); }
  bool is_free(VarId v) const { return !subst_[v].has_value(); }
  int free_count() const;
  const std::optional<AffineExpr>& substitution(VarId v) const { return subst_[v]; }
  const std::vector<Inequality>& inequalities() const { return ineqs_; }

  AffineExpr reduce(const AffineExpr& e) const;

  // e == 0. Eliminates the highest-numbered variable of the reduced e.
  // `elim` (if given) receives the elimination, var = -1 when e was already
  // implied by the substitution map.
  Status add_equality(const AffineExpr& e, Elimination* elim = nullptr);
  Status add_inequality(const AffineExpr& e, bool strict);

  // Exact feasibility of the constraint set including strict inequalities.
  // A strictly feasible store caches a witness point so that later additions
  // satisfied by it skip the LP.
  bool feasible();

  // Feasibility of the closure (strict relaxed to non-strict).
  bool closure_feasible() const;

  // Maximum of e over the closure.
  LpResult maximize(const AffineExpr& e) const;

  // Sign of e on the store's solution set: the unique consistent sign, or
  // kUnknown when two or more are consistent.
  Sign sign_of(const AffineExpr& e) const;

  // Point satisfying all strict inequalities with positive slack, if one
  // exists: values for the free variables only.
  std::optional<std::vector<std::optional<Rational>>> strict_point() const;

  // Extend values of the free variables to every variable.
  std::vector<std::optional<Rational>> complete(std::vector<std::optional<Rational>> free) const;

  // Dimension of the closure: free variables minus implicit equalities.
  // Returns -1 when the closure is empty.
  int closure_dimension() const;

 private:
  struct Witness {
    std::vector<std::optional<Rational>> values;
  };

  // Column index for each free variable, -1 otherwise.
  std::vector<int> free_columns(int* count) const;
  bool witness_satisfies(const AffineExpr& e, bool strict) const;
  std::optional<std::vector<std::optional<Rational>>> solve_strict() const;

  std::vector<std::optional<AffineExpr>> subst_;
  std::vector<Inequality> ineqs_;
  std::optional<Witness> witness_;
  bool inconsistent_ = false;
};

}  // namespace sqtile
