#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sqtile/affine_expr.hpp"
#include "sqtile/constraint_store.hpp"
#include "sqtile/rational.hpp"
#include "sqtile/tiling.hpp"

namespace sqtile {

// ---------------------------------------------------------------------------
// Symbolic skyline

// Piece of the height profile over [left, right] at the given height. All
// coordinates are affine in the side-length variables.
struct Segment {
  AffineExpr left;
  AffineExpr right;
  AffineExpr height;

  bool filled() const { return height.is_constant() && height.constant() == Rational(1); }
};

struct PlacedTile {
  AffineExpr x;
  AffineExpr y;
  VarId side = -1;
};

// Search node: segments partition [0, 1] left to right, adjacent segments
// have different heights, and every expression is reduced by the store.
struct SkylineState {
  std::vector<Segment> segments;
  std::vector<PlacedTile> tiles;
  ConstraintStore store;

  static SkylineState root(int n);

  int placed() const { return static_cast<int>(tiles.size()); }
  int unfilled() const;

  // Add a constraint and re-reduce every expression of the node.
  bool add_equality(const AffineExpr& e);
  bool add_inequality(const AffineExpr& e, bool strict);

  // Concrete tiling for an assignment of the store's free variables.
  Tiling realize(const std::vector<std::optional<Rational>>& free_values) const;
};

// ---------------------------------------------------------------------------
// Enumeration

struct SearchOptions {
  // Report every optimum (up to symmetry). Otherwise a single witness: the
  // first seed construction that is optimal, else the least by tiling_key.
  bool all_optima = false;
  // Prune subtrees whose upper bound falls strictly below this value. When
  // unset and seeding is enabled, the best verified construction with n
  // tiles provides it.
  std::optional<Rational> prune_with_incumbent;
  bool seed_from_constructions = true;
  int workers = 1;
  int max_n = 9;
  std::uint64_t node_budget = 100'000'000;
  // Called for every leaf tiling that reaches the prune threshold (or every
  // leaf when there is none), serialized across workers.
  std::function<void(const Tiling&, const Rational&)> leaf_observer;
};

struct SearchResult {
  enum class Outcome {
    kOptimum,         // max_sigma holds psi_3(n)
    kInfeasible,      // no tiling with n squares exists
    kBelowThreshold,  // no tiling reaches the user-supplied prune threshold
  };

  int n = 0;
  Outcome outcome = Outcome::kInfeasible;
  std::optional<Rational> max_sigma;
  std::vector<Tiling> witnesses;  // canonical forms, ordered by tiling_key
  std::optional<Rational> prune_threshold;

  std::uint64_t nodes_explored = 0;
  std::uint64_t leaves = 0;
  std::uint64_t lp_calls = 0;
  std::uint64_t pruned_by_bound = 0;

  // Leaves whose closure optimum is only approached by degenerate tilings.
  std::uint64_t unattained_leaves = 0;
  std::optional<Rational> max_unattained_sup;
  // Dimension of the optimal face (closure) for each emitted leaf tiling.
  std::map<int, std::uint64_t> face_dimensions;
};

// Exact maximum of the edge sum over all tilings of the unit square by n
// squares. Dispatches to the OpenMP driver when workers > 1. Throws
// ResourceGuardError when n exceeds max_n or the node budget runs out.
SearchResult enumerate_max(int n, const SearchOptions& options = {});

// Single-threaded reference driver.
SearchResult enumerate_max_serial(int n, const SearchOptions& options = {});

// Splits the tree at a shallow depth and explores the frontier with OpenMP.
// Results (including node counts) match the serial driver exactly.
SearchResult enumerate_max_parallel(int n, const SearchOptions& options = {});

// Verified constructions with exactly n tiles used as incumbent seeds.
std::vector<Tiling> seed_tilings(int n);

// Sign of an expression under a store (exact LP).
Sign sign_of(const AffineExpr& e, const ConstraintStore& store);

}  // namespace sqtile
