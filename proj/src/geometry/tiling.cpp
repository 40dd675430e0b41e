#include "sqtile/tiling.hpp"

#include <algorithm>
#include <tuple>

#include "sqtile/errors.hpp"

namespace sqtile {
namespace {

bool open_intervals_overlap(const Rational& a0, const Rational& a1, const Rational& b0,
                            const Rational& b1) {
  return a0 < b1 && b0 < a1;
}

bool tile_less(const Tile& a, const Tile& b) {
  return std::tie(a.y, a.x, a.s) < std::tie(b.y, b.x, b.s);
}

bool sequence_less(const Tiling& a, const Tiling& b) {
  return std::lexicographical_compare(a.tiles.begin(), a.tiles.end(), b.tiles.begin(),
                                      b.tiles.end(), tile_less);
}

}  // namespace

const char* to_string(Violation v) {
  switch (v) {
    case Violation::kNone: return "none";
    case Violation::kNonPositiveSide: return "non-positive-side";
    case Violation::kOutsideSquare: return "outside-square";
    case Violation::kOverlap: return "overlap";
    case Violation::kCoverage: return "coverage";
  }
  return "unknown";
}

Verdict verify(const Tiling& t, bool require_full_cover) {
  Verdict v;
  const Rational one(1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Tile& a = t[i];
    if (a.s.sign() <= 0) {
      v.violation = Violation::kNonPositiveSide;
      v.tiles = {i};
      v.message = "tile " + std::to_string(i) + " has side " + a.s.to_string();
      return v;
    }
    if (a.x.sign() < 0 || a.y.sign() < 0 || a.x + a.s > one || a.y + a.s > one) {
      v.violation = Violation::kOutsideSquare;
      v.tiles = {i};
      v.message = "tile " + std::to_string(i) + " leaves the unit square";
      return v;
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Tile& a = t[i];
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const Tile& b = t[j];
      if (open_intervals_overlap(a.x, a.x + a.s, b.x, b.x + b.s) &&
          open_intervals_overlap(a.y, a.y + a.s, b.y, b.y + b.s)) {
        v.violation = Violation::kOverlap;
        v.tiles = {i, j};
        v.message = "tiles " + std::to_string(i) + " and " + std::to_string(j) + " overlap";
        return v;
      }
    }
  }
  v.area = area(t);
  if (require_full_cover && v.area != one) {
    v.violation = Violation::kCoverage;
    v.message = "tiles cover area " + v.area.to_string() + ", deficit " + (one - v.area).to_string();
  }
  return v;
}

Rational sigma(const Tiling& t) {
  Rational acc;
  for (const auto& tile : t.tiles) acc += tile.s;
  return acc;
}

Rational area(const Tiling& t) {
  Rational acc;
  for (const auto& tile : t.tiles) acc += tile.s * tile.s;
  return acc;
}

Rational CrossSection::sides(const Tiling& t) const {
  Rational acc;
  for (auto i : tiles) acc += t[i].s;
  return acc;
}

CrossSection cross_section(const Tiling& t, const Rational& c, Axis axis) {
  if (c.sign() <= 0 || c >= Rational(1)) {
    throw DomainError("cross-section coordinate must lie in (0, 1), got " + c.to_string());
  }
  CrossSection out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Rational& lo = axis == Axis::kVertical ? t[i].x : t[i].y;
    const Rational hi = lo + t[i].s;
    if (lo == c || hi == c) {
      out.ambiguous = true;
      out.tiles.clear();
      return out;
    }
    if (lo < c && c < hi) out.tiles.push_back(i);
  }
  return out;
}

bool is_corner_tile(const Tile& tile) {
  const Rational one(1);
  const bool at_left = tile.x.is_zero();
  const bool at_right = tile.x + tile.s == one;
  const bool at_bottom = tile.y.is_zero();
  const bool at_top = tile.y + tile.s == one;
  return (at_left || at_right) && (at_bottom || at_top);
}

CoastalReport coastal_report(const Tiling& t) {
  CoastalReport r;
  const Rational one(1);
  auto better = [&](std::optional<std::size_t> cur, std::size_t cand) {
    if (!cur) return true;
    const Tile& a = t[cand];
    const Tile& b = t[*cur];
    if (a.s != b.s) return a.s > b.s;
    return std::tie(a.y, a.x) < std::tie(b.y, b.x);
  };
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Tile& tile = t[i];
    const bool left = tile.x.is_zero();
    const bool right = tile.x + tile.s == one;
    if (left) {
      r.left_coastal.push_back(i);
      if (better(r.left_max, i)) r.left_max = i;
    }
    if (right) {
      r.right_coastal.push_back(i);
      if (better(r.right_max, i)) r.right_max = i;
    }
    if (!left && !right) {
      r.inland.push_back(i);
      r.inland_sigma += tile.s;
    }
    ++r.size_class_counts[tile.s];
  }
  if (r.left_max && r.right_max && t[*r.left_max].s + t[*r.right_max].s == one) {
    r.big_pair = std::make_pair(*r.left_max, *r.right_max);
  }
  return r;
}

Tiling transform(const Tiling& t, Transform op) {
  const Rational one(1);
  Tiling out;
  out.tiles.reserve(t.size());
  for (const auto& a : t.tiles) {
    switch (op) {
      case Transform::kIdentity: out.tiles.push_back(a); break;
      case Transform::kRotate90: out.tiles.push_back({one - a.y - a.s, a.x, a.s}); break;
      case Transform::kReflectX: out.tiles.push_back({one - a.x - a.s, a.y, a.s}); break;
      case Transform::kReflectY: out.tiles.push_back({a.x, one - a.y - a.s, a.s}); break;
      case Transform::kTranspose: out.tiles.push_back({a.y, a.x, a.s}); break;
    }
  }
  return out;
}

std::vector<Tiling> dihedral_images(const Tiling& t) {
  std::vector<Tiling> out;
  out.reserve(8);
  Tiling r = t;
  Tiling m = transform(t, Transform::kReflectX);
  for (int k = 0; k < 4; ++k) {
    out.push_back(r);
    out.push_back(m);
    r = transform(r, Transform::kRotate90);
    m = transform(m, Transform::kRotate90);
  }
  return out;
}

Tiling sorted_tiles(Tiling t) {
  std::sort(t.tiles.begin(), t.tiles.end(), tile_less);
  return t;
}

Tiling canonical_form(const Tiling& t) {
  std::optional<Tiling> best;
  for (auto& image : dihedral_images(t)) {
    Tiling s = sorted_tiles(std::move(image));
    if (!best || sequence_less(s, *best)) best = std::move(s);
  }
  return *best;
}

std::string tiling_key(const Tiling& t) {
  std::string out;
  for (const auto& a : t.tiles) {
    if (!out.empty()) out += ';';
    out += a.x.to_string() + ',' + a.y.to_string() + ',' + a.s.to_string();
  }
  return out;
}

}  // namespace sqtile
