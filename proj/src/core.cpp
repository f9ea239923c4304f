#include "dtwmean/core.hpp"

#include <cmath>

namespace dtwmean {

Sample Sample::with_unit_weights(std::vector<TimeSeries> series) {
  Sample s;
  s.weights.assign(series.size(), 1.0);
  s.series = std::move(series);
  return s;
}

std::size_t Sample::max_length() const {
  std::size_t n = 0;
  for (const auto& x : series) n = std::max(n, x.size());
  return n;
}

void require_series(const TimeSeries& x) {
  if (x.empty()) throw std::invalid_argument("time series must be non-empty");
  for (double v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("time series contains a non-finite value");
  }
}

void require_sample(const Sample& s) {
  if (s.series.empty()) throw std::invalid_argument("sample must contain at least one series");
  if (s.weights.size() != s.series.size())
    throw std::invalid_argument("sample weights must match the number of series");
  bool any_positive = false;
  for (double w : s.weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("sample weights must be nonnegative");
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw std::invalid_argument("sample needs at least one positive weight");
  for (const auto& x : s.series) require_series(x);
}

bool validate_path(const WarpingPath& p, std::size_t m, std::size_t n) {
  const auto& q = p.pairs;
  if (q.empty()) return false;
  if (q.front().i != 1 || q.front().j != 1) return false;
  if (q.back().i != m || q.back().j != n) return false;
  for (std::size_t l = 0; l + 1 < q.size(); ++l) {
    if (q[l + 1].i < q[l].i || q[l + 1].j < q[l].j) return false;
    std::size_t di = q[l + 1].i - q[l].i;
    std::size_t dj = q[l + 1].j - q[l].j;
    if (di > 1 || dj > 1 || (di == 0 && dj == 0)) return false;
  }
  return true;
}

double path_cost(const WarpingPath& p, const TimeSeries& x, const TimeSeries& y) {
  require_series(x);
  require_series(y);
  if (!validate_path(p, x.size(), y.size()))
    throw std::invalid_argument("warping path is not valid for the given series");
  double cost = 0.0;
  for (const auto& [i, j] : p.pairs) {
    double d = x[i - 1] - y[j - 1];
    cost += d * d;
  }
  return cost;
}

TimeSeries condense(const TimeSeries& x) {
  TimeSeries out;
  out.reserve(x.size());
  for (double v : x) {
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

bool is_condensed(const TimeSeries& x) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] == x[i + 1]) return false;
  }
  return true;
}

}  // namespace dtwmean
