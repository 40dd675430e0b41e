#include <cstdio>
#include <sstream>

#include "sqtile/cli.hpp"
#include "sqtile/constructions.hpp"
#include "sqtile/errors.hpp"

namespace sqtile {
namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Exact integer when the scaled value is one, otherwise 12 significant digits.
std::string px(const Rational& v, int canvas) {
  const Rational scaled = v * Rational(canvas);
  if (scaled.is_integer()) return scaled.numerator().get_str();
  return fmt_double(scaled.to_double());
}

}  // namespace

std::string render_svg(const Tiling& t, const RenderSpec& spec) {
  if (spec.canvas_px < 50) throw ParameterError("canvas must be at least 50 px");
  const int c = spec.canvas_px;
  const std::string size = std::to_string(c);
  const std::string stroke = spec.stroke_width_px.is_integer() ? spec.stroke_width_px.numerator().get_str()
                                                               : fmt_double(spec.stroke_width_px.to_double());
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "  <path d=\"M0 0H" << size << 'V' << size << "H0Z\" fill=\"none\" stroke=\"#888888\" stroke-width=\""
     << stroke << "\"/>\n";
  for (const auto& tile : t.tiles) {
    os << "  <rect x=\"" << px(tile.x, c) << "\" y=\"" << px(Rational(1) - tile.y - tile.s, c) << "\" width=\""
       << px(tile.s, c) << "\" height=\"" << px(tile.s, c)
       << "\" fill=\"#dfe8f2\" stroke=\"#1f2d3d\" stroke-width=\"" << stroke << "\"/>\n";
  }
  if (spec.label_sides) {
    const Rational half(1, 2);
    for (const auto& tile : t.tiles) {
      os << "  <text x=\"" << px(tile.x + tile.s * half, c) << "\" y=\""
         << px(Rational(1) - tile.y - tile.s * half, c)
         << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"sans-serif\" font-size=\""
         << std::max(8, c / 40) << "\">" << tile.s.to_string() << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string note_table(int k_max) {
  if (k_max < 3) throw ParameterError("table needs k_max >= 3");
  std::ostringstream os;
  os << "k,n,lower_bound,decimal,note\n";
  for (int k = 3; k <= k_max; ++k) {
    const Rational bound = note_sigma(k);
    os << k << ',' << k * k - 1 << ',' << bound.to_string() << ',' << fmt_double(bound.to_double()) << ',';
    if (k == 3) os << "psi3(8)=13/5 exceeds this bound";
    os << '\n';
  }
  return os.str();
}

}  // namespace sqtile
