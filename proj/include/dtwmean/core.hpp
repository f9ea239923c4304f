#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dtwmean {

/// A univariate time series. Operations require length >= 1 and finite values.
using TimeSeries = std::vector<double>;

/// 1-based index pair (i, j) aligning element i of one series with element j
/// of another. All serialized and printed paths use this convention.
struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Warping path of order m x n: starts at (1,1), ends at (m,n), successive
/// differences in {(1,0),(0,1),(1,1)}.
struct WarpingPath {
  std::vector<IndexPair> pairs;
  std::size_t m = 0;
  std::size_t n = 0;

  std::size_t length() const { return pairs.size(); }
};

/// k time series with nonnegative weights, at least one positive.
struct Sample {
  std::vector<TimeSeries> series;
  std::vector<double> weights;

  static Sample with_unit_weights(std::vector<TimeSeries> series);

  std::size_t size() const { return series.size(); }
  std::size_t max_length() const;
};

/// Thrown when an instance exceeds the configured memory or work budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument unless x is non-empty with finite elements.
void require_series(const TimeSeries& x);

/// Throws std::invalid_argument unless s is a well-formed sample.
void require_sample(const Sample& s);

/// True iff p satisfies all three warping-path conditions for order (m, n).
bool validate_path(const WarpingPath& p, std::size_t m, std::size_t n);

/// Cost of aligning x and y along p: sum of squared differences over the
/// aligned pairs. Throws if p is not valid for order (len(x), len(y)).
double path_cost(const WarpingPath& p, const TimeSeries& x, const TimeSeries& y);

/// Drops repeated consecutive elements. Idempotent.
TimeSeries condense(const TimeSeries& x);

/// True iff no two consecutive elements are equal.
bool is_condensed(const TimeSeries& x);

}  // namespace dtwmean
