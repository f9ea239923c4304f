#pragma once

#include <functional>

#include "dtwmean/core.hpp"

namespace dtwmean {

struct DtwResult {
  double sq_distance = 0.0;
  WarpingPath path;
};

/// Squared DTW distance with one optimal warping path, via the standard
/// O(m*n) accumulated-cost table. Backtracking ties prefer the diagonal
/// predecessor, then the vertical one (previous x element), then the
/// horizontal one.
DtwResult dtw_sq(const TimeSeries& x, const TimeSeries& y);

/// Calls fn for every valid warping path of order (m, n) exactly once, in
/// lexicographic order of the step sequence with (0,1) < (1,0) < (1,1).
/// Path counts grow like the Delannoy numbers; keep m + n small.
void for_each_path(std::size_t m, std::size_t n,
                   const std::function<void(const WarpingPath&)>& fn);

std::vector<WarpingPath> enumerate_paths(std::size_t m, std::size_t n);

/// Oracle: minimizes path_cost over every warping path.
/// Throws ResourceError when len(x) + len(y) > 16.
double dtw_sq_brute(const TimeSeries& x, const TimeSeries& y);

}  // namespace dtwmean
