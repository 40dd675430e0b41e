#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqtile/affine_expr.hpp"
#include "sqtile/rational.hpp"

namespace sqtile {

// expr >= 0, expr > 0 or expr == 0.
struct LinearConstraint {
  enum class Kind { kGe, kGt, kEq };
  AffineExpr expr;
  Kind kind = Kind::kGe;
};

// Maximize an affine objective. Variables are nonnegative unless listed in
// free_vars. Strict constraints are relaxed to non-strict (the closure).
struct LinProgram {
  AffineExpr objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VarId> free_vars;
};

struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Rational value;
  Assignment vertex;  // every variable mentioned by the program

  bool optimal() const { return status == Status::kOptimal; }
};

// Exact rational simplex with Bland's rule.
LpResult lp_max(const LinProgram& p);

// ---------------------------------------------------------------------------
// Dense kernel shared by the store and lp_max.

// maximize c.x subject to A x <= b, x >= 0.
struct DenseLpResult {
  LpResult::Status status = LpResult::Status::kInfeasible;
  Rational value;
  std::vector<Rational> x;
};

DenseLpResult solve_dense_lp(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                             std::vector<Rational> c);

// Number of dense LPs solved by this thread (for search statistics).
std::uint64_t& thread_lp_counter();

}  // namespace sqtile
