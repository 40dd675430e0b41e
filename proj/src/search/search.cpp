#include "sqtile/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "sqtile/constructions.hpp"
#include "sqtile/errors.hpp"
#include "sqtile/lp.hpp"

namespace sqtile {
namespace {

struct Accumulator {
  std::optional<Rational> best;
  std::map<std::string, Tiling> witnesses;  // keyed by canonical tiling_key
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t lp_calls = 0;
  std::uint64_t pruned_by_bound = 0;
  std::uint64_t unattained = 0;
  std::optional<Rational> max_unattained;
  std::map<int, std::uint64_t> face_dimensions;

  void offer(const Rational& value, std::string key, Tiling canonical) {
    if (!best || value > *best) {
      best = value;
      witnesses.clear();
    } else if (value < *best) {
      return;
    }
    witnesses.emplace(std::move(key), std::move(canonical));
  }

  void absorb(Accumulator&& other) {
    for (auto& [key, t] : other.witnesses) offer(*other.best, key, std::move(t));
    nodes += other.nodes;
    leaves += other.leaves;
    lp_calls += other.lp_calls;
    pruned_by_bound += other.pruned_by_bound;
    unattained += other.unattained;
    if (other.max_unattained && (!max_unattained || *other.max_unattained > *max_unattained)) {
      max_unattained = other.max_unattained;
    }
    for (const auto& [dim, count] : other.face_dimensions) face_dimensions[dim] += count;
  }
};

struct Shared {
  int n = 0;
  const SearchOptions* options = nullptr;
  std::optional<Rational> threshold;
  std::atomic<std::uint64_t> nodes{0};
  std::mutex observer_mutex;
};

AffineExpr sum_of_sides(const SkylineState& s) {
  AffineExpr obj;
  for (const auto& t : s.tiles) obj += AffineExpr::variable(t.side);
  return s.store.reduce(obj);
}

// Depth-first explorer. Each node picks the leftmost lowest unfilled segment,
// places a fresh square at its left end, and forks on every comparison that
// the constraint store cannot decide.
class Explorer {
 public:
  explicit Explorer(Shared& shared) : shared_(shared) {}

  // States reaching this many placed tiles are handed to the sink instead of
  // being expanded.
  void stop_at(int depth, std::vector<SkylineState>* sink) {
    frontier_depth_ = depth;
    frontier_ = sink;
  }

  void expand(SkylineState s) {
    if (frontier_ && s.placed() == frontier_depth_) {
      frontier_->push_back(std::move(s));
      return;
    }
    ++acc.nodes;
    const auto total = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (total > shared_.options->node_budget) {
      throw ResourceGuardError("node budget of " + std::to_string(shared_.options->node_budget) +
                               " exhausted before the search completed");
    }
    const int remaining = shared_.n - s.placed();
    const int unfilled = s.unfilled();
    if (remaining == 0) {
      if (unfilled == 0) leaf(std::move(s));
      return;
    }
    // Every unfilled segment needs its own tile to start raising it.
    if (unfilled == 0 || unfilled > remaining) return;
    choose(std::move(s));
  }

  Accumulator acc;

 private:
  void choose(SkylineState s) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < s.segments.size(); ++i)
      if (!s.segments[i].filled()) open.push_back(i);

    for (std::size_t k = 0; k < open.size(); ++k) {
      const std::size_t i = open[k];
      SkylineState child = k + 1 == open.size() ? std::move(s) : s;
      bool ok = true;
      const AffineExpr& hi = child.segments[i].height;
      for (std::size_t j : open) {
        if (j == i) continue;
        // Strictly above to the left, at least as high to the right.
        if (!child.add_inequality(child.segments[j].height - hi, j < i)) {
          ok = false;
          break;
        }
      }
      if (!ok || !child.store.feasible()) continue;
      if (shared_.threshold) {
        const int remaining = shared_.n - child.placed();
        AffineExpr bound = sum_of_sides(child);
        bound.add_scaled(AffineExpr(1) - child.segments[i].height, remaining);
        const LpResult top = child.store.maximize(bound);
        if (!top.optimal() || top.value < *shared_.threshold) {
          ++acc.pruned_by_bound;
          continue;
        }
      }
      place(std::move(child), i);
    }
  }

  void place(SkylineState s, std::size_t i) {
    const VarId v = s.placed();
    const AffineExpr side = AffineExpr::variable(v);
    const Segment seg = s.segments[i];
    const AffineExpr width = seg.right - seg.left;
    s.add_inequality(side, true);

    {
      SkylineState full = s;
      if (full.add_equality(side - width) && full.store.feasible()) raise(std::move(full), i, v, true);
    }
    if (s.add_inequality(width - side, true) && s.store.feasible()) raise(std::move(s), i, v, false);
  }

  void raise(SkylineState s, std::size_t i, VarId v, bool full) {
    const Segment seg = s.segments[i];
    const AffineExpr top = s.store.reduce(seg.height + AffineExpr::variable(v));
    s.tiles.push_back({seg.left, seg.height, v});
    if (full) {
      s.segments[i].height = top;
    } else {
      const AffineExpr cut = s.store.reduce(seg.left + AffineExpr::variable(v));
      s.segments[i] = Segment{seg.left, cut, top};
      s.segments.insert(s.segments.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                        Segment{cut, seg.right, seg.height});
    }

    // The new top either reaches the upper edge or stays strictly below it.
    {
      SkylineState reach = s;
      if (reach.add_equality(top - AffineExpr(1)) && reach.store.feasible()) {
        merge_left(std::move(reach), i, full);
      }
    }
    if (s.add_inequality(AffineExpr(1) - top, true) && s.store.feasible()) {
      merge_left(std::move(s), i, full);
    }
  }

  void merge_left(SkylineState s, std::size_t i, bool full) {
    if (i == 0) {
      merge_right(std::move(s), i, full);
      return;
    }
    compare_adjacent(std::move(s), i - 1, [&](SkylineState next, bool merged) {
      merge_right(std::move(next), merged ? i - 1 : i, full);
    });
  }

  void merge_right(SkylineState s, std::size_t i, bool full) {
    // A partial-width tile leaves its lower remainder to the right.
    if (!full || i + 1 >= s.segments.size()) {
      expand(std::move(s));
      return;
    }
    compare_adjacent(std::move(s), i, [&](SkylineState next, bool) { expand(std::move(next)); });
  }

  // Forks on the order of the heights of segments a and a + 1; equal
  // neighbours are merged before the continuation runs.
  template <typename Cont>
  void compare_adjacent(SkylineState s, std::size_t a, Cont&& cont) {
    const Segment& lhs = s.segments[a];
    const Segment& rhs = s.segments[a + 1];
    if (lhs.filled() != rhs.filled()) {
      cont(std::move(s), false);
      return;
    }
    const AffineExpr diff = lhs.height - rhs.height;
    if (diff.is_constant()) {
      if (diff.constant().is_zero()) merge(s, a);
      const bool merged = diff.constant().is_zero();
      cont(std::move(s), merged);
      return;
    }
    {
      SkylineState same = s;
      if (same.add_equality(diff) && same.store.feasible()) {
        merge(same, a);
        cont(std::move(same), true);
      }
    }
    {
      SkylineState above = s;
      if (above.add_inequality(diff, true) && above.store.feasible()) cont(std::move(above), false);
    }
    if (s.add_inequality(-diff, true) && s.store.feasible()) cont(std::move(s), false);
  }

  static void merge(SkylineState& s, std::size_t a) {
    s.segments[a].right = s.segments[a + 1].right;
    s.segments.erase(s.segments.begin() + static_cast<std::ptrdiff_t>(a) + 1);
  }

  void leaf(SkylineState s) {
    ++acc.leaves;
    const AffineExpr objective = sum_of_sides(s);
    const LpResult top = s.store.maximize(objective);
    if (!top.optimal()) return;
    const Rational& value = top.value;
    if (shared_.threshold && value < *shared_.threshold) return;

    std::vector<std::optional<Rational>> point(static_cast<std::size_t>(s.store.num_vars()));
    for (const auto& [v, x] : top.vertex) point[v] = x;
    Tiling tiling = s.realize(point);
    if (!verify(tiling, true)) {
      // The vertex is degenerate; look for a genuine tiling on the optimal face.
      ConstraintStore face = s.store;
      face.add_inequality(objective - AffineExpr(value), false);
      auto inner = face.strict_point();
      if (!inner) {
        ++acc.unattained;
        if (!acc.max_unattained || value > *acc.max_unattained) acc.max_unattained = value;
        return;
      }
      tiling = s.realize(*inner);
      if (!verify(tiling, true)) throw std::logic_error("interior optimum does not realize a tiling");
    }

    ConstraintStore face = s.store;
    face.add_equality(objective - AffineExpr(value));
    ++acc.face_dimensions[face.closure_dimension()];

    if (shared_.options->leaf_observer) {
      std::lock_guard<std::mutex> lock(shared_.observer_mutex);
      shared_.options->leaf_observer(tiling, value);
    }
    Tiling canonical = canonical_form(tiling);
    std::string key = tiling_key(canonical);
    acc.offer(value, std::move(key), std::move(canonical));
  }

  Shared& shared_;
  int frontier_depth_ = -1;
  std::vector<SkylineState>* frontier_ = nullptr;
};

struct Prepared {
  std::optional<Rational> threshold;
  bool seeded = false;
  std::vector<std::string> seed_keys;  // canonical keys, preferred as the single witness
};

Prepared prepare(int n, const SearchOptions& options) {
  if (n < 1) throw ParameterError("enumerate_max needs n >= 1");
  if (n > options.max_n) {
    throw ResourceGuardError("n = " + std::to_string(n) + " exceeds the search limit of " +
                             std::to_string(options.max_n));
  }
  Prepared p;
  if (options.prune_with_incumbent) {
    p.threshold = options.prune_with_incumbent;
  } else if (options.seed_from_constructions) {
    for (const auto& t : seed_tilings(n)) {
      const Rational s = sigma(t);
      if (!p.threshold || s > *p.threshold) p.threshold = s;
      p.seed_keys.push_back(tiling_key(canonical_form(t)));
    }
    p.seeded = p.threshold.has_value();
  }
  return p;
}

SearchResult finish(int n, const SearchOptions& options, const Prepared& prep, Accumulator&& acc) {
  SearchResult r;
  r.n = n;
  r.prune_threshold = prep.threshold;
  r.nodes_explored = acc.nodes;
  r.leaves = acc.leaves;
  r.lp_calls = acc.lp_calls;
  r.pruned_by_bound = acc.pruned_by_bound;
  r.unattained_leaves = acc.unattained;
  r.max_unattained_sup = acc.max_unattained;
  r.face_dimensions = std::move(acc.face_dimensions);
  if (acc.best) {
    r.outcome = SearchResult::Outcome::kOptimum;
    r.max_sigma = acc.best;
    if (options.all_optima) {
      for (auto& [key, t] : acc.witnesses) r.witnesses.push_back(std::move(t));
    } else {
      auto pick = acc.witnesses.begin();
      for (const auto& key : prep.seed_keys) {
        if (auto it = acc.witnesses.find(key); it != acc.witnesses.end()) {
          pick = it;
          break;
        }
      }
      r.witnesses.push_back(std::move(pick->second));
    }
  } else if (prep.seeded) {
    throw std::logic_error("search missed the seeded construction for n = " + std::to_string(n));
  } else if (prep.threshold) {
    r.outcome = SearchResult::Outcome::kBelowThreshold;
  } else {
    r.outcome = SearchResult::Outcome::kInfeasible;
  }
  for (const auto& w : r.witnesses) {
    if (!verify(w, true) || sigma(w) != *r.max_sigma) {
      throw std::logic_error("search produced an unsound witness");
    }
  }
  return r;
}

}  // namespace

std::vector<Tiling> seed_tilings(int n) {
  std::vector<Tiling> out;
  for (int k = 1; k * k <= n + 1; ++k) {
    if (k * k == n) out.push_back(build(ConstructionId::grid(k)));
    if (k >= 3 && k * k - 1 == n) out.push_back(build(ConstructionId::note(k)));
    for (int m = 2; m < k; ++m) {
      if (k * k - m * m + 1 == n) out.push_back(merge_block(build(ConstructionId::grid(k)), 0, m));
    }
  }
  if (n == 8) out.push_back(build(ConstructionId::figure8()));
  std::erase_if(out, [](const Tiling& t) { return !verify(t, true); });
  return out;
}

SearchResult enumerate_max_serial(int n, const SearchOptions& options) {
  const Prepared prep = prepare(n, options);
  Shared shared;
  shared.n = n;
  shared.options = &options;
  shared.threshold = prep.threshold;
  Explorer explorer(shared);
  const auto lp_before = thread_lp_counter();
  explorer.expand(SkylineState::root(n));
  explorer.acc.lp_calls = thread_lp_counter() - lp_before;
  return finish(n, options, prep, std::move(explorer.acc));
}

SearchResult enumerate_max_parallel(int n, const SearchOptions& options) {
  const Prepared prep = prepare(n, options);
  const int workers = std::max(1, options.workers);
  Shared shared;
  shared.n = n;
  shared.options = &options;
  shared.threshold = prep.threshold;

  // Deepen the split until the frontier offers enough independent subtrees.
  std::vector<SkylineState> frontier;
  Accumulator head;
  for (int depth = 1;; ++depth) {
    frontier.clear();
    shared.nodes.store(0);
    Explorer top(shared);
    top.stop_at(depth, &frontier);
    const auto lp_before = thread_lp_counter();
    top.expand(SkylineState::root(n));
    top.acc.lp_calls = thread_lp_counter() - lp_before;
    head = std::move(top.acc);
    if (frontier.size() >= static_cast<std::size_t>(4 * workers) || depth >= n - 1) break;
  }

  std::vector<Accumulator> parts(frontier.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(frontier.size()); ++k) {
    try {
      Explorer e(shared);
      const auto lp_before = thread_lp_counter();
      e.expand(std::move(frontier[static_cast<std::size_t>(k)]));
      e.acc.lp_calls = thread_lp_counter() - lp_before;
      parts[static_cast<std::size_t>(k)] = std::move(e.acc);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& part : parts) head.absorb(std::move(part));
  return finish(n, options, prep, std::move(head));
}

SearchResult enumerate_max(int n, const SearchOptions& options) {
  return options.workers > 1 ? enumerate_max_parallel(n, options) : enumerate_max_serial(n, options);
}

}  // namespace sqtile
