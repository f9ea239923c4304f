#include "dtwmean/dtw.hpp"

#include <algorithm>
#include <limits>

namespace dtwmean {

DtwResult dtw_sq(const TimeSeries& x, const TimeSeries& y) {
  require_series(x);
  require_series(y);
  const std::size_t m = x.size();
  const std::size_t n = y.size();

  std::vector<double> acc(m * n);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return acc[i * n + j]; };
  auto cost = [&](std::size_t i, std::size_t j) {
    double d = x[i] - y[j];
    return d * d;
  };

  at(0, 0) = cost(0, 0);
  for (std::size_t i = 1; i < m; ++i) at(i, 0) = at(i - 1, 0) + cost(i, 0);
  for (std::size_t j = 1; j < n; ++j) at(0, j) = at(0, j - 1) + cost(0, j);
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      double best = std::min({at(i - 1, j - 1), at(i - 1, j), at(i, j - 1)});
      at(i, j) = best + cost(i, j);
    }
  }

  // Recover one optimal path: diagonal beats vertical beats horizontal.
  std::vector<IndexPair> rev;
  std::size_t i = m - 1;
  std::size_t j = n - 1;
  rev.push_back({i + 1, j + 1});
  while (i > 0 || j > 0) {
    if (i == 0) {
      --j;
    } else if (j == 0) {
      --i;
    } else {
      double diag = at(i - 1, j - 1);
      double vert = at(i - 1, j);
      double horiz = at(i, j - 1);
      double best = std::min({diag, vert, horiz});
      if (diag == best) {
        --i;
        --j;
      } else if (vert == best) {
        --i;
      } else {
        --j;
      }
    }
    rev.push_back({i + 1, j + 1});
  }
  std::reverse(rev.begin(), rev.end());

  DtwResult r;
  r.sq_distance = at(m - 1, n - 1);
  r.path = WarpingPath{std::move(rev), m, n};
  return r;
}

void for_each_path(std::size_t m, std::size_t n,
                   const std::function<void(const WarpingPath&)>& fn) {
  if (m < 1 || n < 1) throw std::invalid_argument("path order must be at least 1 x 1");
  WarpingPath p;
  p.m = m;
  p.n = n;
  p.pairs.push_back({1, 1});

  // Depth-first extension, steps tried in lexicographic order.
  auto extend = [&](auto&& self) -> void {
    auto [i, j] = p.pairs.back();
    if (i == m && j == n) {
      fn(p);
      return;
    }
    constexpr std::size_t kSteps[3][2] = {{0, 1}, {1, 0}, {1, 1}};
    for (const auto& st : kSteps) {
      std::size_t ni = i + st[0];
      std::size_t nj = j + st[1];
      if (ni > m || nj > n) continue;
      p.pairs.push_back({ni, nj});
      self(self);
      p.pairs.pop_back();
    }
  };
  extend(extend);
}

std::vector<WarpingPath> enumerate_paths(std::size_t m, std::size_t n) {
  std::vector<WarpingPath> out;
  for_each_path(m, n, [&](const WarpingPath& p) { out.push_back(p); });
  return out;
}

double dtw_sq_brute(const TimeSeries& x, const TimeSeries& y) {
  require_series(x);
  require_series(y);
  if (x.size() + y.size() > 16)
    throw ResourceError("dtw_sq_brute: instance too large (len(x)+len(y) > 16)");
  double best = std::numeric_limits<double>::infinity();
  for_each_path(x.size(), y.size(), [&](const WarpingPath& p) {
    double c = 0.0;
    for (const auto& [i, j] : p.pairs) {
      double d = x[i - 1] - y[j - 1];
      c += d * d;
    }
    best = std::min(best, c);
  });
  return best;
}

}  // namespace dtwmean
