#include "sqtile/tiling_json.hpp"

#include <algorithm>

#include "sqtile/errors.hpp"

namespace sqtile {
namespace {

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line of the ordinal-th (0-based) occurrence of "key" used as an object key.
int locate_key(std::string_view text, std::string_view key, std::size_t ordinal) {
  const std::string needle = "\"" + std::string(key) + "\"";
  std::size_t pos = 0;
  std::size_t seen = 0;
  while ((pos = text.find(needle, pos)) != std::string_view::npos) {
    std::size_t after = pos + needle.size();
    while (after < text.size() && (text[after] == ' ' || text[after] == '\t' ||
                                   text[after] == '\n' || text[after] == '\r')) {
      ++after;
    }
    if (after < text.size() && text[after] == ':') {
      if (seen++ == ordinal) return line_of_offset(text, pos);
    }
    pos += needle.size();
  }
  return 0;
}

struct Located {
  std::string field;
  std::string key;
  std::size_t ordinal;
};

Tiling decode(const nlohmann::ordered_json& doc, std::string_view source) {
  auto fail = [&](const std::string& what, const Located& where) -> ParseError {
    const int line = source.empty() ? 0 : locate_key(source, where.key, where.ordinal);
    std::string msg = where.field + ": " + what;
    if (line > 0) msg = "line " + std::to_string(line) + ", " + msg;
    return ParseError(msg, where.field, line);
  };
  if (!doc.is_object()) throw ParseError("tiling document must be a JSON object", "$");
  if (!doc.contains("tiles")) throw ParseError("missing field \"tiles\"", "tiles");
  const auto& tiles = doc.at("tiles");
  if (!tiles.is_array()) throw fail("must be an array", {"tiles", "tiles", 0});

  Tiling t;
  t.tiles.reserve(tiles.size());
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const auto& item = tiles[i];
    const std::string base = "tiles[" + std::to_string(i) + "]";
    if (!item.is_object()) throw ParseError(base + ": must be an object", base);
    Tile tile;
    for (const char* key : {"x", "y", "s"}) {
      const Located where{base + "." + key, key, i};
      if (!item.contains(key)) throw ParseError(where.field + ": missing", where.field);
      const auto& value = item.at(key);
      if (!value.is_string()) throw fail("rational must be a string \"p/q\"", where);
      Rational r;
      try {
        r = Rational::parse(value.get<std::string>());
      } catch (const ParseError& e) {
        throw fail(e.what(), where);
      }
      (key[0] == 'x' ? tile.x : key[0] == 'y' ? tile.y : tile.s) = std::move(r);
    }
    t.tiles.push_back(std::move(tile));
  }
  if (!doc.contains("n")) throw ParseError("missing field \"n\"", "n");
  const auto& n = doc.at("n");
  if (!n.is_number_integer() || n.get<long long>() != static_cast<long long>(t.size())) {
    throw fail("n must equal the number of tiles (" + std::to_string(t.size()) + ")", {"n", "n", 0});
  }
  return t;
}

}  // namespace

nlohmann::ordered_json tiling_to_json(const Tiling& t) {
  nlohmann::ordered_json tiles = nlohmann::ordered_json::array();
  for (const auto& a : t.tiles) {
    tiles.push_back({{"x", a.x.to_string()}, {"y", a.y.to_string()}, {"s", a.s.to_string()}});
  }
  return {{"n", t.size()}, {"tiles", std::move(tiles)}};
}

Tiling tiling_from_json(const nlohmann::ordered_json& doc) { return decode(doc, {}); }

Tiling parse_tiling(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const int line = line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ": malformed JSON: " + e.what(), "$", line);
  }
  return decode(doc, text);
}

std::string dump_tiling(const Tiling& t) { return tiling_to_json(t).dump(2); }

}  // namespace sqtile
