#pragma once

#include <string>
#include <vector>

#include "sqtile/tiling.hpp"

namespace sqtile {

// One structural claim about a tiling. `applies` is false when the tiling is
// outside the claim's hypotheses; such checks never count as violations.
struct LemmaCheck {
  std::string name;
  bool applies = false;
  bool holds = true;
  std::string detail;

  bool violated() const { return applies && !holds; }
};

struct LemmaAudit {
  Rational sigma;
  CoastalReport report;
  std::vector<LemmaCheck> checks;

  bool violated() const;
};

// Coastal claims (hypothesis: edge sum below 3, which every tiling with at
// most 8 squares satisfies):
//   inland-sum       inland tiles have side sum < 1
//   coastal-lines    every unambiguous vertical line meets a coastal tile
//   big-pair         largest left and right coastal sides sum to 1
//   corner-pair      every left/right coastal pair summing to 1 has a corner tile
// Optimum claim (hypothesis: 8 squares, edge sum at least 13/5):
//   exactly-three    three tiles of side 1 - s_A, s_A the largest corner side
// Precondition: verify(t, true) accepts.
LemmaAudit audit_lemmas(const Tiling& t);

}  // namespace sqtile
