#include "sqtile/audit.hpp"

#include <algorithm>
#include <set>

namespace sqtile {
namespace {

const Rational kThree(3);
const Rational kOptimum8(13, 5);

std::string side_list(const Tiling& t, const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i : idx) out += (out.empty() ? "" : ",") + t[i].s.to_string();
  return "{" + out + "}";
}

}  // namespace

bool LemmaAudit::violated() const {
  return std::any_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.violated(); });
}

LemmaAudit audit_lemmas(const Tiling& t) {
  LemmaAudit a;
  a.sigma = sigma(t);
  a.report = coastal_report(t);
  const CoastalReport& r = a.report;
  const bool coastal_hyp = a.sigma < kThree;

  a.checks.push_back({"inland-sum", coastal_hyp, r.inland_sigma < Rational(1),
                      "inland sides " + side_list(t, r.inland) + " sum " + r.inland_sigma.to_string()});

  {
    // Probe one line strictly between each pair of consecutive vertical edges.
    std::set<Rational> edges{Rational(0), Rational(1)};
    for (const auto& tile : t.tiles) {
      edges.insert(tile.x);
      edges.insert(tile.x + tile.s);
    }
    std::string bad;
    for (auto it = edges.begin(); std::next(it) != edges.end(); ++it) {
      const Rational c = (*it + *std::next(it)) / Rational(2);
      const CrossSection cs = cross_section(t, c, Axis::kVertical);
      const bool coastal = std::any_of(cs.tiles.begin(), cs.tiles.end(), [&](std::size_t i) {
        return t[i].x.is_zero() || t[i].x + t[i].s == Rational(1);
      });
      if (!coastal) bad = "x = " + c.to_string() + " meets only inland tiles";
    }
    a.checks.push_back({"coastal-lines", coastal_hyp, bad.empty(), bad.empty() ? "every line meets a coastal tile" : bad});
  }

  {
    std::string detail = "no left/right coastal tiles";
    if (r.left_max && r.right_max) {
      detail = "largest sides " + t[*r.left_max].s.to_string() + " + " + t[*r.right_max].s.to_string() + " = " +
               (t[*r.left_max].s + t[*r.right_max].s).to_string();
    }
    a.checks.push_back({"big-pair", coastal_hyp, r.big_pair.has_value(), detail});
  }

  {
    std::size_t pairs = 0;
    std::string bad;
    for (std::size_t i : r.left_coastal) {
      for (std::size_t j : r.right_coastal) {
        if (i == j || t[i].s + t[j].s != Rational(1)) continue;
        ++pairs;
        if (!is_corner_tile(t[i]) && !is_corner_tile(t[j])) {
          bad = "tiles " + std::to_string(i) + " and " + std::to_string(j) + " are both off the corners";
        }
      }
    }
    a.checks.push_back({"corner-pair", coastal_hyp, bad.empty(),
                        bad.empty() ? std::to_string(pairs) + " pair(s) checked" : bad});
  }

  {
    const bool hyp = t.size() == 8 && a.sigma >= kOptimum8;
    std::optional<Rational> s_a;
    for (const auto& tile : t.tiles)
      if (is_corner_tile(tile) && (!s_a || tile.s > *s_a)) s_a = tile.s;
    std::size_t count = 0;
    std::string detail = "no corner tile";
    if (s_a) {
      const Rational s_b = Rational(1) - *s_a;
      if (auto it = r.size_class_counts.find(s_b); it != r.size_class_counts.end()) count = it->second;
      detail = "s_A = " + s_a->to_string() + ", " + std::to_string(count) + " tile(s) of side " + s_b.to_string();
    }
    a.checks.push_back({"exactly-three", hyp, count == 3, detail});
  }
  return a;
}

}  // namespace sqtile
