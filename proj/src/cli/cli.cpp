#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqtile/audit.hpp"
#include "sqtile/bounds.hpp"
#include "sqtile/cli.hpp"
#include "sqtile/constructions.hpp"
#include "sqtile/errors.hpp"
#include "sqtile/oracle.hpp"
#include "sqtile/search.hpp"
#include "sqtile/tiling_json.hpp"

namespace sqtile {
namespace {

using nlohmann::ordered_json;

// Raised inside a command to end it with a specific exit code.
struct Exit {
  int code;
};

std::string decimal(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", v);
  return buf;
}

int default_workers() {
  const char* env = std::getenv("SQTILE_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long w = std::strtol(env, &end, 10);
  if (*end != '\0' || w < 1 || w > 1024) throw ParameterError("SQTILE_WORKERS must be a positive integer");
  return static_cast<int>(w);
}

class Context {
 public:
  Context(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out(out), err(err) {}

  std::string read(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    std::ifstream f(path);
    if (!f) {
      err << "error: cannot open " << path << "\n";
      throw Exit{kExitUsage};
    }
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  void write(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
      out << text;
      return;
    }
    std::ofstream f(path);
    if (!f || !(f << text)) {
      err << "error: cannot write " << path << "\n";
      throw Exit{kExitUsage};
    }
  }

  // Parses and verifies; reports and exits on a violation.
  Tiling load_valid(const std::string& path, bool full_cover) {
    Tiling t = parse_tiling(read(path));
    const Verdict v = verify(t, full_cover);
    if (!v.ok()) {
      out << verdict_json(t, v).dump() << "\n";
      throw Exit{v.violation == Violation::kCoverage ? kExitCoverage : kExitGeometry};
    }
    return t;
  }

  static ordered_json verdict_json(const Tiling& t, const Verdict& v) {
    ordered_json j;
    j["status"] = v.ok() ? "accept" : "reject";
    if (!v.ok()) {
      j["violation"] = to_string(v.violation);
      j["tiles"] = v.tiles;
      j["message"] = v.message;
    }
    j["n"] = t.size();
    j["sigma"] = sigma(t).to_string();
    j["area"] = v.area.to_string();
    return j;
  }

  std::istream& in_;
  std::ostream& out;
  std::ostream& err;
};

void print_audit(std::ostream& out, const Tiling& t, const LemmaAudit& a) {
  const CoastalReport& r = a.report;
  out << "n " << t.size() << "\n";
  out << "sigma " << a.sigma.to_string() << "\n";
  out << "inland_sigma " << r.inland_sigma.to_string() << (r.inland_sigma < Rational(1) ? " (< 1)" : " (>= 1)")
      << "\n";
  if (r.big_pair) {
    const auto [i, j] = *r.big_pair;
    out << "big_pair " << i << ' ' << j << " sides " << t[i].s.to_string() << ' ' << t[j].s.to_string()
        << " corner " << (is_corner_tile(t[i]) ? "yes" : "no") << ' ' << (is_corner_tile(t[j]) ? "yes" : "no")
        << "\n";
  } else {
    out << "big_pair none\n";
  }
  out << "size_classes";
  for (const auto& [side, count] : r.size_class_counts) out << ' ' << side.to_string() << 'x' << count;
  out << "\n";
  for (const auto& c : a.checks) {
    out << "check " << c.name << ' ' << (!c.applies ? "n/a" : c.holds ? "ok" : "VIOLATED") << " : " << c.detail
        << "\n";
  }
  if (std::none_of(a.checks.begin(), a.checks.end(), [](const LemmaCheck& c) { return c.applies; })) {
    out << "note: edge sum " << a.sigma.to_string() << " is outside the lemma hypotheses\n";
  }
}

ordered_json result_json(const SearchResult& r) {
  ordered_json j;
  j["n"] = r.n;
  switch (r.outcome) {
    case SearchResult::Outcome::kOptimum: j["outcome"] = "optimum"; break;
    case SearchResult::Outcome::kInfeasible: j["outcome"] = "infeasible"; break;
    case SearchResult::Outcome::kBelowThreshold: j["outcome"] = "below-threshold"; break;
  }
  j["max_sigma"] = r.max_sigma ? ordered_json(r.max_sigma->to_string()) : ordered_json(nullptr);
  j["prune_threshold"] = r.prune_threshold ? ordered_json(r.prune_threshold->to_string()) : ordered_json(nullptr);
  j["nodes"] = r.nodes_explored;
  j["leaves"] = r.leaves;
  j["lp_calls"] = r.lp_calls;
  j["pruned_by_bound"] = r.pruned_by_bound;
  j["unattained_leaves"] = r.unattained_leaves;
  j["max_unattained_sup"] =
      r.max_unattained_sup ? ordered_json(r.max_unattained_sup->to_string()) : ordered_json(nullptr);
  ordered_json faces = ordered_json::object();
  for (const auto& [dim, count] : r.face_dimensions) faces[std::to_string(dim)] = count;
  j["face_dimensions"] = faces;
  j["witnesses"] = ordered_json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(tiling_to_json(w));
  return j;
}

Rational parse_flag(const std::string& value, const char* flag) {
  try {
    return Rational::parse(value);
  } catch (const ParseError& e) {
    throw ParseError(std::string("--") + flag + ": " + e.what(), flag);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx(in, out, err);
  CLI::App app{"Exact tilings of the unit square by squares", "sqtile"};
  app.require_subcommand(1);

  std::string file;
  std::string output;

  auto* verify_cmd = app.add_subcommand("verify", "Check a tiling file; prints the edge sum");
  bool full_cover = false;
  verify_cmd->add_option("file", file, "Tiling JSON, '-' for stdin")->required();
  verify_cmd->add_flag("--full-cover", full_cover, "Require the tiles to cover the square");

  auto* audit_cmd = app.add_subcommand("audit", "Coastal analysis and structural checks of a tiling");
  audit_cmd->add_option("file", file, "Tiling JSON, '-' for stdin")->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "Print the edge sum of a tiling or packing");
  sigma_cmd->add_option("file", file, "Tiling JSON, '-' for stdin")->required();

  auto* construct_cmd = app.add_subcommand("construct", "Write a known construction as tiling JSON");
  std::string construction;
  construct_cmd->add_option("id", construction, "figure8 | packing8 | grid:K | note:K")->required();
  construct_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Exact maximum edge sum over all n-square tilings");
  int n = 0;
  bool all_optima = false;
  int workers = 0;
  std::uint64_t budget = SearchOptions{}.node_budget;
  std::string prune_below;
  bool audit_leaves = false;
  enumerate_cmd->add_option("--n", n, "Number of squares")->required();
  enumerate_cmd->add_flag("--all-optima", all_optima, "Report every optimum up to symmetry");
  enumerate_cmd->add_option("--workers", workers, "Worker threads (default $SQTILE_WORKERS or 1)");
  enumerate_cmd->add_option("--budget", budget, "Node budget");
  enumerate_cmd->add_option("--prune-below", prune_below, "Only explore tilings with edge sum at least this");
  enumerate_cmd->add_flag("--audit", audit_leaves, "Run the structural checks on every reported leaf tiling");
  enumerate_cmd->add_option("-o,--output", output, "Results JSON file (default stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Integer-grid brute force on a D x D board");
  int denominator = 0;
  bool all_witnesses = false;
  oracle_cmd->add_option("--n", n, "Number of squares")->required();
  oracle_cmd->add_option("--denominator", denominator, "Board side D")->required();
  oracle_cmd->add_flag("--all", all_witnesses, "Print every maximizer up to symmetry");
  oracle_cmd->add_option("--workers", workers, "Worker threads (default $SQTILE_WORKERS or 1)");

  auto* bound_cmd = app.add_subcommand("bound", "Closed-form edge-sum bounds");
  bound_cmd->require_subcommand(1);
  auto* cs_cmd = bound_cmd->add_subcommand("cs", "sqrt(n * area) bound");
  std::int64_t cs_n = 0;
  std::string area_text = "1";
  cs_cmd->add_option("--n", cs_n, "Number of squares")->required();
  cs_cmd->add_option("--area", area_text, "Total area as p/q (default 1)");
  auto* curve_cmd = bound_cmd->add_subcommand("curve", "Maximize alpha + beta t + sqrt(gamma t + delta t^2)");
  std::string alpha, beta, gamma, delta, lo, hi;
  curve_cmd->add_option("--alpha", alpha)->required();
  curve_cmd->add_option("--beta", beta)->required();
  curve_cmd->add_option("--gamma", gamma)->required();
  curve_cmd->add_option("--delta", delta)->required();
  curve_cmd->add_option("--lo", lo)->required();
  curve_cmd->add_option("--hi", hi)->required();

  auto* render_cmd = app.add_subcommand("render", "SVG drawing of a tiling or packing");
  RenderSpec spec;
  std::string stroke = "1";
  render_cmd->add_option("file", file, "Tiling JSON, '-' for stdin")->required();
  render_cmd->add_option("--canvas", spec.canvas_px, "Canvas side in px (>= 50)");
  render_cmd->add_option("--stroke", stroke, "Stroke width in px as p/q");
  render_cmd->add_flag("--labels", spec.label_sides, "Print each side length inside its tile");
  render_cmd->add_option("-o,--output", output, "SVG file (default stdout)");

  auto* table_cmd = app.add_subcommand("table", "Edge sums of the k^2 - 1 construction");
  int k_max = 12;
  table_cmd->add_option("--k-max", k_max, "Largest k (>= 3)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (workers == 0) workers = default_workers();
    if (workers < 0) throw ParameterError("--workers must be positive");

    if (*verify_cmd) {
      Tiling t = parse_tiling(ctx.read(file));
      const Verdict v = verify(t, full_cover);
      out << Context::verdict_json(t, v).dump() << "\n";
      if (!v.ok()) return v.violation == Violation::kCoverage ? kExitCoverage : kExitGeometry;
    } else if (*audit_cmd) {
      const Tiling t = ctx.load_valid(file, true);
      const LemmaAudit a = audit_lemmas(t);
      print_audit(out, t, a);
      if (a.violated()) return kExitLemma;
    } else if (*sigma_cmd) {
      const Tiling t = ctx.load_valid(file, false);
      out << sigma(t).to_string() << "\n";
    } else if (*construct_cmd) {
      ctx.write(output, dump_tiling(build(ConstructionId::parse(construction))) + "\n");
    } else if (*enumerate_cmd) {
      SearchOptions opt;
      opt.all_optima = all_optima;
      opt.workers = workers;
      opt.node_budget = budget;
      if (!prune_below.empty()) opt.prune_with_incumbent = parse_flag(prune_below, "prune-below");
      std::uint64_t audited = 0;
      std::uint64_t violations = 0;
      std::string first_violation;
      if (audit_leaves) {
        opt.leaf_observer = [&](const Tiling& t, const Rational&) {
          ++audited;
          const LemmaAudit a = audit_lemmas(t);
          if (!a.violated()) return;
          ++violations;
          if (first_violation.empty()) first_violation = tiling_key(t);
        };
      }
      const SearchResult r = enumerate_max(n, opt);
      ordered_json j = result_json(r);
      if (audit_leaves) {
        // The optimum check needs every optimal witness, not just the leaves.
        for (const auto& w : r.witnesses) {
          if (audit_lemmas(w).violated()) {
            ++violations;
            if (first_violation.empty()) first_violation = tiling_key(w);
          }
        }
        j["audit"] = {{"leaves_audited", audited}, {"violations", violations}};
        if (!first_violation.empty()) j["audit"]["first_violation"] = first_violation;
      }
      if (!output.empty() && output != "-") {
        ctx.write(output, j.dump(2) + "\n");
        out << "n " << n << " " << j["outcome"].get<std::string>();
        if (r.max_sigma) out << " max_sigma " << r.max_sigma->to_string();
        out << " nodes " << r.nodes_explored << " leaves " << r.leaves << " witnesses " << r.witnesses.size()
            << "\n";
      } else {
        out << j.dump(2) << "\n";
      }
      if (violations > 0) return kExitLemma;
    } else if (*oracle_cmd) {
      GridOptions opt;
      opt.workers = workers;
      const GridResult r = grid_enumerate(n, denominator, opt);
      ordered_json j;
      j["n"] = n;
      j["denominator"] = denominator;
      j["infeasible"] = !r.max_sum.has_value();
      j["max_sum"] = r.max_sum ? ordered_json(*r.max_sum) : ordered_json(nullptr);
      j["sigma"] = r.max_sum ? ordered_json(Rational(*r.max_sum, denominator).to_string()) : ordered_json(nullptr);
      j["count"] = r.count;
      j["optimal_count"] = r.optimal_count;
      j["witness_classes"] = r.witnesses.size();
      if (all_witnesses) {
        j["witnesses"] = ordered_json::array();
        for (const auto& g : r.witnesses) j["witnesses"].push_back(tiling_to_json(grid_to_tiling(g, denominator)));
      } else if (!r.witnesses.empty()) {
        j["witness"] = tiling_to_json(grid_to_tiling(r.witnesses.front(), denominator));
      }
      out << j.dump(2) << "\n";
    } else if (*cs_cmd) {
      const QuadExt b = cs_bound(cs_n, parse_flag(area_text, "area"));
      out << "bound " << b.to_string() << "\n";
      out << "decimal " << decimal(b.to_long_double()) << "\n";
    } else if (*curve_cmd) {
      const BoundCurve c{parse_flag(alpha, "alpha"), parse_flag(beta, "beta"), parse_flag(gamma, "gamma"),
                         parse_flag(delta, "delta"), parse_flag(lo, "lo"),     parse_flag(hi, "hi")};
      const CurveMaximum m = maximize_curve(c);
      out << "t_star " << m.t_star.to_string() << "\n";
      out << "value " << m.value.to_string() << "\n";
      out << "t_star_decimal " << decimal(m.t_star.to_long_double()) << "\n";
      out << "value_decimal " << decimal(m.value.to_long_double()) << "\n";
    } else if (*render_cmd) {
      spec.stroke_width_px = parse_flag(stroke, "stroke");
      if (spec.stroke_width_px.sign() < 0) throw ParameterError("--stroke must be nonnegative");
      const Tiling t = ctx.load_valid(file, false);
      ctx.write(output, render_svg(t, spec));
    } else if (*table_cmd) {
      out << note_table(k_max);
    }
  } catch (const Exit& e) {
    return e.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceGuardError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace sqtile
