#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "sqtile/rational.hpp"
#include "sqtile/tiling.hpp"

namespace sqtile {

struct ConstructionId {
  enum class Kind { kGrid, kFigure8, kPacking8, kNote };

  Kind kind = Kind::kFigure8;
  int k = 0;

  static ConstructionId grid(int k) { return {Kind::kGrid, k}; }
  static ConstructionId figure8() { return {Kind::kFigure8, 0}; }
  static ConstructionId packing8() { return {Kind::kPacking8, 0}; }
  static ConstructionId note(int k) { return {Kind::kNote, k}; }

  // "figure8", "packing8", "grid:K", "note:K"
  static ConstructionId parse(std::string_view text);
  std::string to_string() const;
};

// grid(k): the standard k x k tiling.
// figure8: the eight-tile tiling with edge sum 13/5.
// packing8: grid(3) without its top-right tile (a packing, area 8/9).
// note(k): (k^2 - 1)-tile tiling with edge sum k - 1/(k-1), k >= 3.
// Throws ParameterError on out-of-range parameters.
Tiling build(const ConstructionId& id);

// k - 1/(k - 1), checked against the edge sum of build(note(k)).
Rational note_sigma(int k);

// Replace the m x m block of equal tiles whose lower-left tile is tiles[i] by
// one tile of m-fold side. The merged tile takes the lowest index of the
// block; other tiles keep their relative order. Throws StructureError when
// the block is not present.
Tiling merge_block(const Tiling& t, std::size_t i, int m);

}  // namespace sqtile
