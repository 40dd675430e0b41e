#include "sqtile/search.hpp"

#include <algorithm>

namespace sqtile {

SkylineState SkylineState::root(int n) {
  SkylineState s;
  s.store = ConstraintStore(n);
  s.segments.push_back({AffineExpr(0), AffineExpr(1), AffineExpr(0)});
  return s;
}

int SkylineState::unfilled() const {
  return static_cast<int>(
      std::count_if(segments.begin(), segments.end(), [](const Segment& g) { return !g.filled(); }));
}

bool SkylineState::add_equality(const AffineExpr& e) {
  ConstraintStore::Elimination elim;
  if (store.add_equality(e, &elim) == ConstraintStore::Status::kInconsistent) return false;
  if (elim.var < 0) return true;
  auto apply = [&](AffineExpr& x) {
    if (x.mentions(elim.var)) x = x.substitute(elim.var, elim.replacement);
  };
  for (auto& g : segments) {
    apply(g.left);
    apply(g.right);
    apply(g.height);
  }
  for (auto& t : tiles) {
    apply(t.x);
    apply(t.y);
  }
  return true;
}

bool SkylineState::add_inequality(const AffineExpr& e, bool strict) {
  return store.add_inequality(e, strict) == ConstraintStore::Status::kOk;
}

Tiling SkylineState::realize(const std::vector<std::optional<Rational>>& free_values) const {
  const auto values = store.complete(free_values);
  Tiling out;
  out.tiles.reserve(tiles.size());
  for (const auto& t : tiles) {
    out.tiles.push_back({t.x.eval(values), t.y.eval(values), *values[t.side]});
  }
  return out;
}

Sign sign_of(const AffineExpr& e, const ConstraintStore& store) { return store.sign_of(e); }

}  // namespace sqtile
