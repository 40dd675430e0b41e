#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqtile/rational.hpp"

namespace sqtile {

// Axis-aligned square with lower-left corner (x, y) and side s.
struct Tile {
  Rational x;
  Rational y;
  Rational s;

  friend bool operator==(const Tile&, const Tile&) = default;
};

struct Tiling {
  std::vector<Tile> tiles;

  std::size_t size() const { return tiles.size(); }
  const Tile& operator[](std::size_t i) const { return tiles[i]; }

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

// ---------------------------------------------------------------------------
// Verification

enum class Violation {
  kNone,
  kNonPositiveSide,
  kOutsideSquare,
  kOverlap,
  kCoverage,
};

const char* to_string(Violation v);

struct Verdict {
  Violation violation = Violation::kNone;
  std::vector<std::size_t> tiles;  // offending indices
  Rational area;                   // total tile area
  std::string message;

  bool ok() const { return violation == Violation::kNone; }
  explicit operator bool() const { return ok(); }
};

// Checks every tile lies in the unit square with positive side, interiors are
// pairwise disjoint, and (optionally) the tiles cover the square. Coverage is
// the area identity sum(s^2) = 1, which is exact given the first two checks.
Verdict verify(const Tiling& t, bool require_full_cover);

Rational sigma(const Tiling& t);
Rational area(const Tiling& t);

// ---------------------------------------------------------------------------
// Cross-sections

enum class Axis { kVertical, kHorizontal };

struct CrossSection {
  bool ambiguous = false;            // some tile has an edge on the line
  std::vector<std::size_t> tiles;    // tiles whose interior meets the line

  Rational sides(const Tiling& t) const;
};

// The line x = c (vertical) or y = c (horizontal), 0 < c < 1.
CrossSection cross_section(const Tiling& t, const Rational& c, Axis axis);

// ---------------------------------------------------------------------------
// Coastal analysis

bool is_corner_tile(const Tile& tile);

struct CoastalReport {
  std::vector<std::size_t> left_coastal;   // x = 0
  std::vector<std::size_t> right_coastal;  // x + s = 1
  std::vector<std::size_t> inland;
  Rational inland_sigma;
  // Largest left and right coastal tiles (ties to least (y, x)); the pair is
  // reported only when their sides sum to exactly 1.
  std::optional<std::size_t> left_max;
  std::optional<std::size_t> right_max;
  std::optional<std::pair<std::size_t, std::size_t>> big_pair;
  std::map<Rational, std::size_t> size_class_counts;
};

CoastalReport coastal_report(const Tiling& t);

// ---------------------------------------------------------------------------
// Symmetries of the unit square

enum class Transform {
  kIdentity,
  kRotate90,   // counter-clockwise about the centre
  kReflectX,   // x -> 1 - x
  kReflectY,   // y -> 1 - y
  kTranspose,  // x <-> y
};

Tiling transform(const Tiling& t, Transform op);

// All eight images under the dihedral group of the square.
std::vector<Tiling> dihedral_images(const Tiling& t);

// Tiles sorted by (y, x, s).
Tiling sorted_tiles(Tiling t);

// Least representative over the dihedral images, comparing tile sequences
// sorted by (y, x) lexicographically.
Tiling canonical_form(const Tiling& t);

// Compact textual key of a tiling, "x,y,s;x,y,s;..." in stored order.
std::string tiling_key(const Tiling& t);

}  // namespace sqtile
