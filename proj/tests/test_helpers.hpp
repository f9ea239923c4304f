#pragma once

#include <cstdint>

#include "dtwmean/core.hpp"
#include "dtwmean/rng.hpp"

namespace dtwmean::testing {

inline TimeSeries random_int_series(Rng& rng, std::size_t min_len, std::size_t max_len, int lo,
                                    int hi) {
  std::size_t n = min_len + rng.next_below(max_len - min_len + 1);
  TimeSeries x(n);
  for (double& v : x) v = static_cast<double>(lo + static_cast<int>(rng.next_below(hi - lo + 1)));
  return x;
}

inline WarpingPath random_valid_path(Rng& rng, std::size_t m, std::size_t n) {
  WarpingPath p;
  p.m = m;
  p.n = n;
  std::size_t i = 1;
  std::size_t j = 1;
  p.pairs.push_back({i, j});
  while (i < m || j < n) {
    if (i == m) {
      ++j;
    } else if (j == n) {
      ++i;
    } else {
      switch (rng.next_below(3)) {
        case 0: ++i; break;
        case 1: ++j; break;
        default: ++i; ++j; break;
      }
    }
    p.pairs.push_back({i, j});
  }
  return p;
}

inline Sample random_int_sample(Rng& rng, std::size_t k, std::size_t min_len, std::size_t max_len,
                                int lo, int hi) {
  Sample s;
  for (std::size_t j = 0; j < k; ++j) s.series.push_back(random_int_series(rng, min_len, max_len, lo, hi));
  s.weights.assign(k, 1.0);
  return s;
}

}  // namespace dtwmean::testing
