// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "helpers.hpp"
#include "sqtile/audit.hpp"
#include "sqtile/bounds.hpp"
#include "sqtile/cli.hpp"
#include "sqtile/constructions.hpp"
#include "sqtile/oracle.hpp"
#include "sqtile/search.hpp"
#include "sqtile/tiling_json.hpp"

using namespace sqtile;
using namespace sqtile::testing;
using nlohmann::json;

namespace {

// Collects the reasons a criterion failed; empty means it passed.
struct Check {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

json cli_json(const std::vector<std::string>& args, int* code) {
  std::istringstream in;
  std::ostringstream out, err;
  *code = run_cli(args, in, out, err);
  try {
    return json::parse(out.str());
  } catch (const json::exception&) {
    return json();
  }
}

void criterion1(Check& c) {
  int code = 0;
  const json r = cli_json({"enumerate", "--n", "8"}, &code);
  c.expect(code == kExitOk, "enumerate exit code " + std::to_string(code));
  c.expect(r.value("max_sigma", json()) == "13/5", "max_sigma " + r.value("max_sigma", json()).dump());
  const Tiling figure = canonical_form(build(ConstructionId::figure8()));
  bool found = false;
  for (const auto& w : r.value("witnesses", json::array())) {
    if (canonical_form(tiling_from_json(nlohmann::ordered_json::parse(w.dump()))) == figure) found = true;
  }
  c.expect(found, "no witness canonically equal to figure8");
  c.summary = "enumerate --n 8: max_sigma " + r.value("max_sigma", json()).dump() + ", nodes " +
              r.value("nodes", json()).dump() + ", figure8 witness " + (found ? "yes" : "no");
}

void criterion2(Check& c) {
  for (const char* n : {"2", "3", "5"}) {
    int code = 0;
    const json r = cli_json({"enumerate", "--n", n}, &code);
    c.expect(code == kExitOk && r.value("outcome", "") == "infeasible", std::string("enumerate --n ") + n);
  }
  for (int d = 1; d <= 12; ++d) {
    int code = 0;
    const json r = cli_json({"oracle", "--n", "5", "--denominator", std::to_string(d)}, &code);
    c.expect(code == kExitOk && r.value("infeasible", false), "oracle n=5 D=" + std::to_string(d));
  }
  c.summary = "n = 2, 3, 5 infeasible; oracle n = 5 infeasible for D = 1..12";
}

void criterion3(Check& c) {
  const Rational packing = sigma(build(ConstructionId::packing8()));
  c.expect(packing == Rational(8, 3), "sigma(packing8) = " + packing.to_string());
  c.expect(verify(build(ConstructionId::packing8()), false).ok(), "packing8 does not verify as a packing");
  const CurveMaximum m = maximize_curve({1, 1, 10, -15, 0, Rational(1, 2)});
  c.expect(m.t_star == QuadExt(Rational(5, 12)) && m.value == QuadExt(Rational(8, 3)),
           "curve max (" + m.t_star.to_string() + ", " + m.value.to_string() + ")");
  const SearchResult r = enumerate_max(8);
  c.expect(r.max_sigma && *r.max_sigma < Rational(8, 3), "optimum not below 8/3");
  c.summary = "packing8 = 8/3, curve max (" + m.t_star.to_string() + ", " + m.value.to_string() + "), 13/5 < 8/3";
}

void criterion4(Check& c) {
  const CurveMaximum m = maximize_curve({1, 3, 6, -15, 0, Rational(2, 5)});
  const QuadExt t((Rational(4, 20)), Rational(1, 20), 6);
  const QuadExt v(Rational(8, 5), Rational(2, 5), 6);
  c.expect(m.t_star == t, "t* = " + m.t_star.to_string());
  c.expect(m.value == v, "value = " + m.value.to_string());
  c.expect(m.value < QuadExt(Rational(258, 100)), "value not < 2.58");
  c.expect(m.value < QuadExt(Rational(13, 5)), "value not < 13/5");
  c.summary = "t* = " + m.t_star.to_string() + ", value = " + m.value.to_string() + " < 258/100 < 13/5";
}

void criterion5(Check& c) {
  const CurveMaximum m = maximize_curve({1, 2, 8, -16, Rational(2, 5), Rational(1, 2)});
  c.expect(m.t_star == QuadExt(Rational(2, 5)), "t* = " + m.t_star.to_string());
  c.expect(m.value == QuadExt(Rational(13, 5)), "value = " + m.value.to_string());
  c.summary = "boundary optimum (" + m.t_star.to_string() + ", " + m.value.to_string() + ")";
}

void criterion6(Check& c) {
  for (int k = 3; k <= 12; ++k) {
    const Tiling t = build(ConstructionId::note(k));
    const std::string tag = "note(" + std::to_string(k) + ")";
    c.expect(verify(t, true).ok(), tag + " does not verify");
    c.expect(t.size() == static_cast<std::size_t>(k * k - 1), tag + " tile count");
    c.expect(sigma(t) == Rational(k) - Rational(1, k - 1), tag + " sigma " + sigma(t).to_string());
  }
  const Rational s3 = sigma(build(ConstructionId::note(3)));
  c.expect(s3 == Rational(5, 2) && s3 < Rational(13, 5), "note(3) not 5/2 < 13/5");
  c.summary = "k = 3..12 verified, sigma = k - 1/(k-1); note(3) = 5/2 < 13/5";
}

void criterion7(Check& c) {
  std::uint64_t leaves = 0, violations = 0, optimum_checks = 0;
  SearchOptions opt;
  opt.all_optima = true;
  opt.prune_with_incumbent = Rational(5, 2);
  auto audit = [&](const Tiling& t) {
    const LemmaAudit a = audit_lemmas(t);
    for (const auto& chk : a.checks) {
      if (chk.name == "exactly-three" && chk.applies) ++optimum_checks;
      if (chk.violated()) {
        ++violations;
        c.failures.push_back(chk.name + " fails on " + tiling_key(t) + ": " + chk.detail);
      }
      if (!chk.applies && chk.name != "exactly-three") c.failures.push_back(chk.name + " inapplicable at sigma >= 5/2");
    }
  };
  opt.leaf_observer = [&](const Tiling& t, const Rational&) {
    ++leaves;
    audit(t);
  };
  const SearchResult r = enumerate_max(8, opt);
  for (const auto& w : r.witnesses) audit(w);
  c.expect(leaves > 0, "no leaves audited");
  c.expect(optimum_checks >= r.witnesses.size() && !r.witnesses.empty(), "exactly-three never applied");
  c.summary = std::to_string(leaves) + " leaves with sigma >= 5/2 and " + std::to_string(r.witnesses.size()) +
              " optima audited, " + std::to_string(violations) + " violations";
}

void criterion8(Check& c) {
  bool eq85 = false, eq63 = false;
  int pairs = 0;
  for (int n : {1, 4, 6, 7, 8}) {
    const SearchResult r = enumerate_max(n);
    if (!r.max_sigma) {
      c.failures.push_back("search infeasible at n=" + std::to_string(n));
      continue;
    }
    for (int d = 1; d <= 8; ++d) {
      const GridResult g = grid_enumerate(n, d);
      ++pairs;
      if (!g.max_sum) continue;
      const Rational v(*g.max_sum, d);
      c.expect(v <= *r.max_sigma, "oracle exceeds search at n=" + std::to_string(n) + " D=" + std::to_string(d));
      for (const auto& w : g.witnesses) c.expect(verify(grid_to_tiling(w, d), true).ok(), "bad oracle witness");
      if (n == 8 && d == 5) eq85 = v == *r.max_sigma && v == Rational(13, 5);
      if (n == 6 && d == 3) eq63 = v == *r.max_sigma && v == Rational(7, 3);
    }
  }
  c.expect(eq85, "no equality at (8, 5)");
  c.expect(eq63, "no equality at (6, 3)");
  c.summary = std::to_string(pairs) + " (n, D) pairs consistent; equality at (8,5) = 13/5 and (6,3) = 7/3";
}

void criterion9(Check& c) {
  constexpr int kCases = 1000;
  for (int i = 0; i < kCases; ++i) {
    const Rational p = random_rational(), q = random_rational(), r = random_rational();
    c.expect((p + q) + r == p + (q + r), "addition not associative");
    c.expect(p * (q + r) == p * q + p * r, "multiplication not distributive");
    c.expect((p * q).to_mpq() == p.to_mpq() * q.to_mpq(), "product disagrees with GMP");
  }
  const Transform ops[] = {Transform::kRotate90, Transform::kReflectX, Transform::kReflectY, Transform::kTranspose};
  for (int i = 0; i < kCases; ++i) {
    const Tiling t = random_tiling();
    const Tiling u = transform(t, ops[uniform(0, 3)]);
    c.expect(verify(u, true).ok() == verify(t, true).ok() && sigma(u) == sigma(t), "transform changed verdict");
  }
  int sections = 0;
  for (int i = 0; i < kCases; ++i) {
    const Tiling t = random_tiling();
    const CrossSection cs = cross_section(t, random_unit_rational(97), uniform(0, 1) ? Axis::kVertical : Axis::kHorizontal);
    if (cs.ambiguous) continue;
    ++sections;
    c.expect(cs.sides(t) == Rational(1), "unambiguous cross-section does not sum to 1");
  }
  for (int i = 0; i < kCases; ++i) {
    const std::int64_t n = uniform(1, 40);
    const Rational s(uniform(1, 50), uniform(1, 50));
    c.expect(cs_bound(n, Rational(n) * s * s) == QuadExt(Rational(n) * s), "CS equality case fails");
  }
  c.summary = "4 x 1000 randomized cases (field axioms, symmetry, " + std::to_string(sections) +
              " unambiguous sections, CS equality)";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"1 optimum for eight squares", criterion1},
      {"2 infeasible counts", criterion2},
      {"3 packing versus tiling at eight", criterion3},
      {"4 at-most-three curve", criterion4},
      {"5 eight-square curve", criterion5},
      {"6 k^2-1 construction", criterion6},
      {"7 lemma audit", criterion7},
      {"8 oracle consistency", criterion8},
      {"9 property suites", criterion9},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (c.failures.empty() ? "PASS" : "FAIL") << "  criterion " << name << " : " << c.summary << " ["
              << timing << "]\n";
    for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) std::cout << "      " << c.failures[i] << "\n";
    if (!c.failures.empty()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
