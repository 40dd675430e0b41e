#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sqtile/rational.hpp"
#include "sqtile/tiling.hpp"

namespace sqtile {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitGeometry = 2,
  kExitCoverage = 3,
  kExitBudget = 4,
  kExitParse = 5,
  kExitLemma = 6,
};

struct RenderSpec {
  int canvas_px = 500;
  Rational stroke_width_px = Rational(1);
  bool label_sides = false;
};

// One <rect> per tile with the y axis flipped so (0, 0) is bottom-left.
// Throws ParameterError when canvas_px < 50.
std::string render_svg(const Tiling& t, const RenderSpec& spec = {});

// CSV of the k^2 - 1 construction bound for 3 <= k <= k_max.
std::string note_table(int k_max);

// Entry point of the sqtile tool; args excludes the program name. "-" as a
// file argument reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sqtile
