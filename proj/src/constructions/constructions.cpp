#include "sqtile/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sqtile/errors.hpp"

namespace sqtile {
namespace {

Tiling grid(int k) {
  if (k < 1) throw ParameterError("grid needs k >= 1");
  const Rational side(1, k);
  Tiling t;
  t.tiles.reserve(static_cast<std::size_t>(k) * k);
  for (int row = 0; row < k; ++row)
    for (int col = 0; col < k; ++col) t.tiles.push_back({side * col, side * row, side});
  return t;
}

Tiling figure8() {
  const Rational f1(1, 5), f2(2, 5), f3(3, 5), f4(4, 5);
  return Tiling{{
      {0, 0, f3},    // A
      {f3, 0, f2},   // B
      {0, f3, f2},   // B'
      {f2, f3, f2},  // B''
      {f3, f2, f1},  // D
      {f4, f2, f1},
      {f4, f3, f1},
      {f4, f4, f1},  // C
  }};
}

Tiling packing8() {
  Tiling t = grid(3);
  const Rational two_thirds(2, 3);
  std::erase_if(t.tiles, [&](const Tile& a) { return a.x == two_thirds && a.y == two_thirds; });
  return t;
}

Tiling note(int k) {
  if (k < 3) throw ParameterError("note(k) needs k >= 3, got " + std::to_string(k));
  const Rational outer(1, k + 1);
  const Rational inner(k, k * k - 1);
  const Rational edge = outer * k;  // side of the replaced k x k block
  Tiling t;
  // Top row and right column of the (k+1)-grid survive.
  for (int i = 0; i <= k; ++i) t.tiles.push_back({outer * i, edge, outer});
  for (int j = 0; j < k; ++j) t.tiles.push_back({edge, outer * j, outer});
  // The lower-left k x k block becomes a (k-1)-grid.
  for (int row = 0; row < k - 1; ++row)
    for (int col = 0; col < k - 1; ++col) t.tiles.push_back({inner * col, inner * row, inner});
  t = sorted_tiles(std::move(t));
  const auto origin = std::find_if(t.tiles.begin(), t.tiles.end(), [](const Tile& a) {
    return a.x.is_zero() && a.y.is_zero();
  });
  return sorted_tiles(merge_block(t, static_cast<std::size_t>(origin - t.tiles.begin()), 2));
}

}  // namespace

ConstructionId ConstructionId::parse(std::string_view text) {
  if (text == "figure8") return figure8();
  if (text == "packing8") return packing8();
  auto with_param = [&](std::string_view prefix) -> std::optional<int> {
    if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
    const auto digits = text.substr(prefix.size());
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParameterError("bad construction parameter in \"" + std::string(text) + "\"");
    }
    return k;
  };
  if (auto k = with_param("grid:")) return grid(*k);
  if (auto k = with_param("note:")) return note(*k);
  throw ParameterError("unknown construction \"" + std::string(text) +
                       "\" (expected figure8, packing8, grid:K or note:K)");
}

std::string ConstructionId::to_string() const {
  switch (kind) {
    case Kind::kGrid: return "grid:" + std::to_string(k);
    case Kind::kFigure8: return "figure8";
    case Kind::kPacking8: return "packing8";
    case Kind::kNote: return "note:" + std::to_string(k);
  }
  return "?";
}

Tiling build(const ConstructionId& id) {
  switch (id.kind) {
    case ConstructionId::Kind::kGrid: return grid(id.k);
    case ConstructionId::Kind::kFigure8: return figure8();
    case ConstructionId::Kind::kPacking8: return packing8();
    case ConstructionId::Kind::kNote: return note(id.k);
  }
  throw ParameterError("unknown construction");
}

Rational note_sigma(int k) {
  if (k < 3) throw ParameterError("note_sigma needs k >= 3, got " + std::to_string(k));
  Rational closed = Rational(k) - Rational(1, k - 1);
  if (sigma(build(ConstructionId::note(k))) != closed) {
    throw std::logic_error("note(" + std::to_string(k) + ") edge sum disagrees with k - 1/(k-1)");
  }
  return closed;
}

Tiling merge_block(const Tiling& t, std::size_t i, int m) {
  if (m < 1) throw ParameterError("merge_block needs m >= 1");
  if (i >= t.size()) throw StructureError("merge_block anchor index out of range");
  const Tile anchor = t[i];
  std::vector<std::size_t> block;
  for (int row = 0; row < m; ++row) {
    for (int col = 0; col < m; ++col) {
      const Tile want{anchor.x + anchor.s * col, anchor.y + anchor.s * row, anchor.s};
      auto it = std::find(t.tiles.begin(), t.tiles.end(), want);
      if (it == t.tiles.end()) {
        throw StructureError("no " + std::to_string(m) + "x" + std::to_string(m) +
                             " block of equal tiles anchored at tile " + std::to_string(i));
      }
      block.push_back(static_cast<std::size_t>(it - t.tiles.begin()));
    }
  }
  std::sort(block.begin(), block.end());
  Tiling out;
  out.tiles.reserve(t.size() - block.size() + 1);
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j == block.front()) {
      out.tiles.push_back({anchor.x, anchor.y, anchor.s * m});
    } else if (!std::binary_search(block.begin(), block.end(), j)) {
      out.tiles.push_back(t[j]);
    }
  }
  return out;
}

}  // namespace sqtile
