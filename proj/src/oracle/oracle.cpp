#include "sqtile/oracle.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <string>

#include "sqtile/errors.hpp"

namespace sqtile {
namespace {

struct Tally {
  std::optional<std::int64_t> best;
  std::map<std::string, GridTiling> witnesses;
  std::uint64_t count = 0;
  std::uint64_t optimal = 0;

  void absorb(Tally&& other) {
    count += other.count;
    if (!other.best) return;
    if (!best || *other.best > *best) {
      best = other.best;
      witnesses = std::move(other.witnesses);
      optimal = other.optimal;
    } else if (*other.best == *best) {
      witnesses.merge(other.witnesses);
      optimal += other.optimal;
    }
  }
};

GridTiling from_tiling(const Tiling& t, int d) {
  GridTiling g;
  g.reserve(t.tiles.size());
  for (const auto& tile : t.tiles) {
    auto scale = [d](const Rational& r) { return static_cast<int>((r * Rational(d)).numerator().get_si()); };
    g.push_back({scale(tile.x), scale(tile.y), scale(tile.s)});
  }
  return g;
}

class Board {
 public:
  Board(int n, int d) : n_(n), d_(d), heights_(static_cast<std::size_t>(d), 0) {}

  void run(Tally& out) {
    tally_ = &out;
    descend(d_ * d_);
  }

  // Subtree with a fixed first tile of side s at the origin.
  void run_first(int s, Tally& out) {
    tally_ = &out;
    place(0, 0, s);
    descend(d_ * d_ - s * s);
    unplace(0, s);
  }

 private:
  void place(int x, int y, int s) {
    for (int i = x; i < x + s; ++i) heights_[i] += s;
    tiles_.push_back({x, y, s});
    sum_ += s;
  }

  void unplace(int x, int s) {
    for (int i = x; i < x + s; ++i) heights_[i] -= s;
    tiles_.pop_back();
    sum_ -= s;
  }

  void descend(int area_left) {
    const int left = n_ - static_cast<int>(tiles_.size());
    if (area_left == 0) {
      if (left == 0) record();
      return;
    }
    if (left == 0 || area_left < left) return;

    int x = 0;
    int runs = 0;
    for (int i = 0; i < d_; ++i) {
      if (heights_[i] < heights_[x]) x = i;
      if (heights_[i] < d_ && (i == 0 || heights_[i] != heights_[i - 1])) ++runs;
    }
    const int h = heights_[x];
    if (runs > left) return;
    const std::int64_t reach = d_ - h;
    if (left * reach * reach < area_left) return;

    int width = 0;
    while (x + width < d_ && heights_[x + width] == h) ++width;
    for (int s = std::min(width, d_ - h); s >= 1; --s) {
      place(x, h, s);
      descend(area_left - s * s);
      unplace(x, s);
    }
  }

  void record() {
    Tally& t = *tally_;
    ++t.count;
    if (t.best && sum_ < *t.best) return;
    if (!t.best || sum_ > *t.best) {
      t.best = sum_;
      t.witnesses.clear();
      t.optimal = 0;
    }
    ++t.optimal;
    const Tiling canonical = canonical_form(grid_to_tiling(tiles_, d_));
    t.witnesses.try_emplace(tiling_key(canonical), from_tiling(canonical, d_));
  }

  int n_;
  int d_;
  std::vector<int> heights_;
  GridTiling tiles_;
  std::int64_t sum_ = 0;
  Tally* tally_ = nullptr;
};

void check(int n, int d, const GridOptions& options) {
  if (n < 1) throw ParameterError("grid oracle needs n >= 1");
  if (d < 1) throw ParameterError("grid oracle needs a positive denominator");
  if (d > options.max_denominator) {
    throw ResourceGuardError("denominator " + std::to_string(d) + " exceeds the oracle limit of " +
                             std::to_string(options.max_denominator));
  }
}

GridResult finish(int n, int d, Tally&& tally) {
  GridResult r;
  r.n = n;
  r.denominator = d;
  r.max_sum = tally.best;
  r.count = tally.count;
  r.optimal_count = tally.optimal;
  for (auto& [key, g] : tally.witnesses) r.witnesses.push_back(std::move(g));
  return r;
}

}  // namespace

Tiling grid_to_tiling(const GridTiling& g, int denominator) {
  Tiling t;
  t.tiles.reserve(g.size());
  for (const auto& tile : g) {
    t.tiles.push_back({Rational(tile.x, denominator), Rational(tile.y, denominator),
                       Rational(tile.s, denominator)});
  }
  return t;
}

GridResult grid_enumerate_serial(int n, int denominator, const GridOptions& options) {
  check(n, denominator, options);
  Tally tally;
  Board(n, denominator).run(tally);
  return finish(n, denominator, std::move(tally));
}

GridResult grid_enumerate_parallel(int n, int denominator, const GridOptions& options) {
  check(n, denominator, options);
  std::vector<Tally> parts(static_cast<std::size_t>(denominator));
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, options.workers))
  for (int s = denominator; s >= 1; --s) {
    try {
      Board(n, denominator).run_first(s, parts[static_cast<std::size_t>(s - 1)]);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  Tally tally;
  for (auto& part : parts) tally.absorb(std::move(part));
  return finish(n, denominator, std::move(tally));
}

GridResult grid_enumerate(int n, int denominator, const GridOptions& options) {
  return options.workers > 1 ? grid_enumerate_parallel(n, denominator, options)
                             : grid_enumerate_serial(n, denominator, options);
}

}  // namespace sqtile
