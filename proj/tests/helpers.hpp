#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sqtile/oracle.hpp"
#include "sqtile/rational.hpp"
#include "sqtile/tiling.hpp"

namespace sqtile::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261015);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

// Mix of small, word-sized and multi-word values so both representations of
// Rational get exercised.
inline Rational random_rational() {
  switch (uniform(0, 3)) {
    case 0: return Rational(uniform(-20, 20), uniform(1, 20));
    case 1: return Rational(uniform(-(1LL << 40), 1LL << 40), uniform(1, 1LL << 40));
    case 2: {
      const Rational big(uniform(INT64_MIN / 2, INT64_MAX / 2), uniform(1, INT64_MAX / 2));
      return big * Rational(uniform(1LL << 30, 1LL << 40), uniform(1, 97));
    }
    default: return Rational(uniform(INT64_MIN / 2, INT64_MAX / 2), uniform(1, INT64_MAX / 2));
  }
}

inline Rational random_unit_rational(std::int64_t max_den = 60) {
  const std::int64_t q = uniform(2, max_den);
  return Rational(uniform(1, q - 1), q);
}

// Random tiling of a d x d board: fill the lowest-leftmost cell with a square
// of random admissible size until the board is full.
inline GridTiling random_grid_tiling(int d) {
  std::vector<int> h(static_cast<std::size_t>(d), 0);
  GridTiling out;
  for (;;) {
    const auto it = std::min_element(h.begin(), h.end());
    if (*it == d) return out;
    const int x = static_cast<int>(it - h.begin());
    int width = 0;
    while (x + width < d && h[x + width] == *it) ++width;
    const int s = static_cast<int>(uniform(1, std::min(width, d - *it)));
    out.push_back({x, *it, s});
    for (int i = x; i < x + s; ++i) h[i] += s;
  }
}

inline Tiling random_tiling() {
  const int d = static_cast<int>(uniform(1, 12));
  Tiling t = grid_to_tiling(random_grid_tiling(d), d);
  std::shuffle(t.tiles.begin(), t.tiles.end(), rng());
  return t;
}

}  // namespace sqtile::testing
