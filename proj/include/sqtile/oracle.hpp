#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqtile/tiling.hpp"

namespace sqtile {

// Integer square on a D x D board, lower-left corner (x, y).
struct GridTile {
  int x = 0;
  int y = 0;
  int s = 0;
  auto operator<=>(const GridTile&) const = default;
};

using GridTiling = std::vector<GridTile>;

struct GridOptions {
  int max_denominator = 15;
  int workers = 1;
};

struct GridResult {
  int n = 0;
  int denominator = 0;
  std::optional<std::int64_t> max_sum;  // empty when no tiling exists
  // Maximizers up to the dihedral group, each in canonical form, ordered by
  // tiling_key of the scaled tiling.
  std::vector<GridTiling> witnesses;
  std::uint64_t count = 0;          // every tiling with n squares
  std::uint64_t optimal_count = 0;  // tilings attaining max_sum (no symmetry reduction)
};

// All tilings of the D x D board by exactly n integer squares.
GridResult grid_enumerate(int n, int denominator, const GridOptions& options = {});
GridResult grid_enumerate_serial(int n, int denominator, const GridOptions& options = {});
GridResult grid_enumerate_parallel(int n, int denominator, const GridOptions& options = {});

Tiling grid_to_tiling(const GridTiling& g, int denominator);

}  // namespace sqtile
