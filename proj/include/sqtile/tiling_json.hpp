#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "sqtile/tiling.hpp"

namespace sqtile {

// {"n": <int>, "tiles": [{"x": "p/q", "y": "p/q", "s": "p/q"}, ...]}
nlohmann::ordered_json tiling_to_json(const Tiling& t);

// Throws ParseError naming the offending field and, when it can be located in
// the source text, its 1-based line.
Tiling tiling_from_json(const nlohmann::ordered_json& doc);
Tiling parse_tiling(std::string_view text);

std::string dump_tiling(const Tiling& t);

}  // namespace sqtile
