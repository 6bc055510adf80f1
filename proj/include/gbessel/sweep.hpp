#pragma once

// Grid extremization shared by every "for all z in the disk" check.
//
// Sweeps may run on several threads. The reduction is deterministic: ties
// on the value are broken by the smallest angle index, then the smallest
// radius index, so results do not depend on the thread count.

#include <cstddef>
#include <functional>
#include <vector>

#include "gbessel/series.hpp"

namespace gbessel {

enum class Extremum { Min, Max };

struct GridExtremum {
  double value = 0.0;
  Complex z{};
  std::size_t radius_index = 0;
  std::size_t angle_index = 0;
};

using GridFunctional = std::function<double(Complex)>;

/// Worker threads used by sweep_grid. Defaults to 1.
void set_sweep_threads(unsigned threads);
unsigned sweep_threads();

/// Throws NumericGuard if the functional returns NaN anywhere.
GridExtremum sweep_grid(const EvaluationGrid& grid, const GridFunctional& fn, Extremum kind);

/// One golden-section pass along the circle |z| = radius around `theta`,
/// searching theta +- half_width. Returns whichever of the refined point
/// and the starting point is better.
GridExtremum refine_along_angle(const GridFunctional& fn, const GridExtremum& start,
                                double radius, double theta, double half_width,
                                Extremum kind);

/// sweep_grid followed by refine_along_angle at the winning radius.
GridExtremum extremize(const EvaluationGrid& grid, const GridFunctional& fn, Extremum kind);

struct GridSample {
  Complex z;
  double value;
};

/// Every grid value, radius-major. Used for CSV export.
std::vector<GridSample> sample_grid(const EvaluationGrid& grid, const GridFunctional& fn);

}  // namespace gbessel
