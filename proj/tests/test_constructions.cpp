#include <doctest.h>

#include <map>

#include "sqtile/constructions.hpp"
#include "sqtile/errors.hpp"

using namespace sqtile;

namespace {

std::map<Rational, int> side_multiset(const Tiling& t) {
  std::map<Rational, int> m;
  for (const auto& tile : t.tiles) ++m[tile.s];
  return m;
}

}  // namespace

TEST_CASE("figure8 coordinates") {
  const Tiling f = build(ConstructionId::figure8());
  const std::vector<Tile> expected{
      {Rational(0), Rational(0), Rational(3, 5)},          {Rational(3, 5), Rational(0), Rational(2, 5)},
      {Rational(0), Rational(3, 5), Rational(2, 5)},       {Rational(2, 5), Rational(3, 5), Rational(2, 5)},
      {Rational(3, 5), Rational(2, 5), Rational(1, 5)},    {Rational(4, 5), Rational(2, 5), Rational(1, 5)},
      {Rational(4, 5), Rational(3, 5), Rational(1, 5)},    {Rational(4, 5), Rational(4, 5), Rational(1, 5)}};
  CHECK(f.tiles == expected);
  CHECK(verify(f, true).ok());
  CHECK(sigma(f) == Rational(13, 5));
}

TEST_CASE("grid and packing") {
  const Tiling g = build(ConstructionId::grid(3));
  CHECK(g.size() == 9);
  CHECK(sigma(g) == Rational(3));
  CHECK(verify(g, true).ok());
  const Tiling p = build(ConstructionId::packing8());
  CHECK(p.size() == 8);
  CHECK(area(p) == Rational(8, 9));
  for (const auto& tile : p.tiles) CHECK_FALSE((tile.x == Rational(2, 3) && tile.y == Rational(2, 3)));
  CHECK_THROWS_AS(build(ConstructionId::grid(0)), ParameterError);
}

TEST_CASE("note construction") {
  CHECK_THROWS_AS(build(ConstructionId::note(2)), ParameterError);
  CHECK_THROWS_AS(note_sigma(2), ParameterError);
  CHECK(note_sigma(3) == Rational(5, 2));
  CHECK(note_sigma(4) == Rational(11, 3));
  CHECK(note_sigma(10) == Rational(89, 9));
  for (int k = 3; k <= 12; ++k) {
    CAPTURE(k);
    const Tiling t = build(ConstructionId::note(k));
    CHECK(t.size() == static_cast<std::size_t>(k * k - 1));
    CHECK(verify(t, true).ok());
    // Sides counted from the construction: the kept row and column of the
    // (k+1)-grid, the (k-1)-grid in the corner, and its merged 2x2 block.
    const Rational small(k, k * k - 1);
    std::map<Rational, int> expected;
    expected[Rational(1, k + 1)] += 2 * k + 1;
    if ((k - 1) * (k - 1) - 4 > 0) expected[small] += (k - 1) * (k - 1) - 4;
    expected[small * Rational(2)] += 1;
    CHECK(side_multiset(t) == expected);
    Rational s;
    for (const auto& [side, count] : expected) s += side * Rational(count);
    CHECK(sigma(t) == s);
    CHECK(sigma(t) == Rational(k) - Rational(1, k - 1));
  }
}

TEST_CASE("merge block") {
  const Tiling g3 = build(ConstructionId::grid(3));
  const Tiling m = merge_block(g3, 0, 2);
  CHECK(m.size() == 6);
  CHECK(sigma(m) == Rational(7, 3));
  CHECK(verify(m, true).ok());
  CHECK(m[0] == Tile{Rational(0), Rational(0), Rational(2, 3)});

  const Tiling unit = merge_block(build(ConstructionId::grid(2)), 0, 2);
  CHECK(unit.tiles == std::vector<Tile>{{Rational(0), Rational(0), Rational(1)}});

  // sigma drops by (m^2 - m) s.
  const Tiling g5 = build(ConstructionId::grid(5));
  const Tiling m3 = merge_block(g5, 6, 3);
  CHECK(m3.size() == 25 - 8);
  CHECK(sigma(m3) == sigma(g5) - Rational(6, 5));
  CHECK(verify(m3, true).ok());

  // Top-right tile of grid(3) has no 2x2 block above and to its right.
  CHECK_THROWS_AS(merge_block(g3, 8, 2), StructureError);
  CHECK_THROWS_AS(merge_block(build(ConstructionId::figure8()), 1, 2), StructureError);
}

TEST_CASE("construction ids") {
  CHECK(ConstructionId::parse("note:7").to_string() == "note:7");
  CHECK(ConstructionId::parse("grid:3").kind == ConstructionId::Kind::kGrid);
  CHECK(ConstructionId::parse("figure8").kind == ConstructionId::Kind::kFigure8);
  CHECK(ConstructionId::parse("packing8").to_string() == "packing8");
  CHECK_THROWS_AS(ConstructionId::parse("grid:"), ParameterError);
  CHECK_THROWS_AS(ConstructionId::parse("hexagon"), ParameterError);
}
