#include "gbessel/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "gbessel/error.hpp"

namespace gbessel {

namespace {

std::atomic<unsigned> g_threads{1};

bool better(const GridExtremum& a, const GridExtremum& b, Extremum kind) {
  if (a.value != b.value) return kind == Extremum::Min ? a.value < b.value : a.value > b.value;
  if (a.angle_index != b.angle_index) return a.angle_index < b.angle_index;
  return a.radius_index < b.radius_index;
}

GridExtremum sweep_range(const EvaluationGrid& grid, const GridFunctional& fn, Extremum kind,
                         std::size_t angle_begin, std::size_t angle_end) {
  GridExtremum best;
  bool have = false;
  for (std::size_t k = angle_begin; k < angle_end; ++k) {
    for (std::size_t j = 0; j < grid.radii().size(); ++j) {
      const Complex z = grid.point(j, k);
      const double v = fn(z);
      if (std::isnan(v)) throw NumericGuard("grid functional returned NaN");
      GridExtremum cand{v, z, j, k};
      if (!have || better(cand, best, kind)) {
        best = cand;
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

void set_sweep_threads(unsigned threads) { g_threads = std::max(1u, threads); }

unsigned sweep_threads() { return g_threads; }

GridExtremum sweep_grid(const EvaluationGrid& grid, const GridFunctional& fn, Extremum kind) {
  const std::size_t m = grid.angles();
  const std::size_t workers = std::min<std::size_t>(g_threads, m);
  if (workers <= 1) return sweep_range(grid, fn, kind, 0, m);

  std::vector<GridExtremum> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          partial[w] = sweep_range(grid, fn, kind, w * m / workers, (w + 1) * m / workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  GridExtremum best = partial.front();
  for (std::size_t w = 1; w < workers; ++w)
    if (better(partial[w], best, kind)) best = partial[w];
  return best;
}

GridExtremum refine_along_angle(const GridFunctional& fn, const GridExtremum& start,
                                double radius, double theta, double half_width,
                                Extremum kind) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double sign = kind == Extremum::Min ? 1.0 : -1.0;
  auto cost = [&](double t) { return sign * fn(std::polar(radius, t)); };

  double lo = theta - half_width;
  double hi = theta + half_width;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = cost(x1);
  double f2 = cost(x2);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = cost(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = cost(x2);
    }
  }
  const double t = f1 < f2 ? x1 : x2;
  const double v = sign * std::min(f1, f2);
  if (std::isnan(v)) return start;
  GridExtremum refined{v, std::polar(radius, t), start.radius_index, start.angle_index};
  const bool improves = kind == Extremum::Min ? v < start.value : v > start.value;
  return improves ? refined : start;
}

GridExtremum extremize(const EvaluationGrid& grid, const GridFunctional& fn, Extremum kind) {
  const GridExtremum coarse = sweep_grid(grid, fn, kind);
  const double step = 2.0 * std::acos(-1.0) / static_cast<double>(grid.angles());
  return refine_along_angle(fn, coarse, grid.radii()[coarse.radius_index],
                            grid.angle(coarse.angle_index), step, kind);
}

std::vector<GridSample> sample_grid(const EvaluationGrid& grid, const GridFunctional& fn) {
  std::vector<GridSample> out;
  out.reserve(grid.size());
  for (std::size_t j = 0; j < grid.radii().size(); ++j)
    for (std::size_t k = 0; k < grid.angles(); ++k) {
      const Complex z = grid.point(j, k);
      out.push_back({z, fn(z)});
    }
  return out;
}

}  // namespace gbessel
