#include <doctest.h>

#include <set>

#include "sqtile/constructions.hpp"
#include "sqtile/errors.hpp"
#include "sqtile/oracle.hpp"
#include "sqtile/search.hpp"

using namespace sqtile;

namespace {

std::set<std::string> keys(const std::vector<Tiling>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(tiling_key(canonical_form(t)));
  return out;
}

void check_sound(const SearchResult& r) {
  for (const auto& w : r.witnesses) {
    CHECK(verify(w, true).ok());
    CHECK(w.size() == static_cast<std::size_t>(r.n));
    CHECK(sigma(w) == *r.max_sigma);
    CHECK(canonical_form(w) == w);
  }
}

}  // namespace

TEST_CASE("root state") {
  const SkylineState s = SkylineState::root(3);
  REQUIRE(s.segments.size() == 1);
  CHECK(s.segments[0].left == AffineExpr(0));
  CHECK(s.segments[0].right == AffineExpr(1));
  CHECK(s.unfilled() == 1);
  CHECK(s.placed() == 0);
  CHECK(s.store.num_vars() == 3);
}

TEST_CASE("small optima") {
  const SearchResult one = enumerate_max(1);
  REQUIRE(one.outcome == SearchResult::Outcome::kOptimum);
  CHECK(*one.max_sigma == Rational(1));
  CHECK(one.witnesses.at(0).tiles == std::vector<Tile>{{Rational(0), Rational(0), Rational(1)}});

  const SearchResult four = enumerate_max(4, {.all_optima = true});
  CHECK(*four.max_sigma == Rational(2));
  REQUIRE(four.witnesses.size() == 1);
  CHECK(four.witnesses[0] == canonical_form(build(ConstructionId::grid(2))));

  const SearchResult six = enumerate_max(6);
  CHECK(*six.max_sigma == Rational(7, 3));
  CHECK(six.witnesses.at(0) == canonical_form(merge_block(build(ConstructionId::grid(3)), 0, 2)));

  CHECK(*enumerate_max(7).max_sigma == Rational(5, 2));
  for (const auto& r : {one, four, six}) check_sound(r);
}

TEST_CASE("infeasible counts") {
  for (int n : {2, 3, 5}) {
    CAPTURE(n);
    const SearchResult r = enumerate_max(n);
    CHECK(r.outcome == SearchResult::Outcome::kInfeasible);
    CHECK_FALSE(r.max_sigma);
    CHECK(r.witnesses.empty());
    CHECK(r.leaves == 0);
  }
}

TEST_CASE("eight squares") {
  const SearchResult r = enumerate_max(8);
  REQUIRE(r.outcome == SearchResult::Outcome::kOptimum);
  CHECK(*r.max_sigma == Rational(13, 5));
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0] == canonical_form(build(ConstructionId::figure8())));
  CHECK(*r.prune_threshold == Rational(13, 5));
  CHECK(r.unattained_leaves == 0);
  check_sound(r);
}

TEST_CASE("every optimum at n = 8 has denominator 5") {
  const SearchResult r = enumerate_max(8, {.all_optima = true});
  check_sound(r);
  const GridResult g = grid_enumerate(8, 5);
  std::vector<Tiling> grid;
  for (const auto& w : g.witnesses) grid.push_back(grid_to_tiling(w, 5));
  CHECK(keys(r.witnesses) == keys(grid));
  CHECK(r.witnesses.size() == 5);
}

TEST_CASE("search without seeding agrees") {
  for (int n : {6, 7, 8}) {
    CAPTURE(n);
    const SearchResult seeded = enumerate_max(n, {.all_optima = true});
    const SearchResult bare = enumerate_max(n, {.all_optima = true, .seed_from_constructions = false});
    CHECK(bare.max_sigma == seeded.max_sigma);
    CHECK(keys(bare.witnesses) == keys(seeded.witnesses));
    CHECK(bare.pruned_by_bound == 0);
    CHECK(bare.nodes_explored >= seeded.nodes_explored);
  }
}

TEST_CASE("results do not depend on the worker count") {
  for (int n : {7, 8}) {
    for (bool all : {false, true}) {
      CAPTURE(n);
      CAPTURE(all);
      const SearchResult serial = enumerate_max_serial(n, {.all_optima = all});
      for (int w : {1, 2, 3, 4}) {
        CAPTURE(w);
        const SearchResult par = enumerate_max_parallel(n, {.all_optima = all, .workers = w});
        CHECK(par.max_sigma == serial.max_sigma);
        CHECK(par.witnesses == serial.witnesses);
        CHECK(par.nodes_explored == serial.nodes_explored);
        CHECK(par.leaves == serial.leaves);
        CHECK(par.pruned_by_bound == serial.pruned_by_bound);
        CHECK(par.lp_calls == serial.lp_calls);
        CHECK(par.face_dimensions == serial.face_dimensions);
      }
    }
  }
}

TEST_CASE("prune threshold and observer") {
  std::vector<Rational> seen;
  SearchOptions opt;
  opt.prune_with_incumbent = Rational(5, 2);
  opt.leaf_observer = [&](const Tiling& t, const Rational& v) {
    CHECK(verify(t, true).ok());
    CHECK(sigma(t) == v);
    seen.push_back(v);
  };
  const SearchResult r = enumerate_max(7, opt);
  CHECK(*r.max_sigma == Rational(5, 2));
  REQUIRE_FALSE(seen.empty());
  for (const auto& v : seen) CHECK(v >= Rational(5, 2));

  const SearchResult above = enumerate_max(6, {.prune_with_incumbent = Rational(5, 2)});
  CHECK(above.outcome == SearchResult::Outcome::kBelowThreshold);
  CHECK_FALSE(above.max_sigma);
}

TEST_CASE("resource guards") {
  CHECK_THROWS_AS(enumerate_max(10), ResourceGuardError);
  CHECK_THROWS_AS(enumerate_max(0), ParameterError);
  CHECK_THROWS_AS(enumerate_max(8, {.node_budget = 100}), ResourceGuardError);
  CHECK_THROWS_AS(enumerate_max(8, {.workers = 2, .node_budget = 100}), ResourceGuardError);
}

TEST_CASE("seed tilings") {
  const auto seeds = seed_tilings(8);
  CHECK(keys(seeds).count(tiling_key(canonical_form(build(ConstructionId::figure8())))) == 1);
  CHECK(keys(seeds).count(tiling_key(canonical_form(build(ConstructionId::note(3))))) == 1);
  for (const auto& t : seeds) CHECK(verify(t, true).ok());
  CHECK(seed_tilings(5).empty());
  CHECK(seed_tilings(9).size() == 1);
}
