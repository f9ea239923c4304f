#include "dtwmean/binary_mean.hpp"

#include <limits>

#include "dtwmean/dtw.hpp"

namespace dtwmean {

bool is_binary_series(const TimeSeries& x) {
  for (double v : x) {
    if (v != 0.0 && v != 1.0) return false;
  }
  return true;
}

void require_binary_series(const TimeSeries& x) {
  require_series(x);
  if (!is_binary_series(x)) throw std::invalid_argument("series must contain only 0 and 1");
}

std::uint64_t binary_condensed_dtw_sq(const TimeSeries& x, const TimeSeries& y) {
  require_binary_series(x);
  require_binary_series(y);
  if (!is_condensed(x) || !is_condensed(y))
    throw std::invalid_argument("binary_condensed_dtw_sq expects condensed series");
  const TimeSeries& a = x.size() >= y.size() ? x : y;
  const TimeSeries& b = x.size() >= y.size() ? y : x;
  const std::uint64_t n = a.size();
  const std::uint64_t m = b.size();
  if (a[0] == b[0]) return (n - m + 1) / 2;  // ceil((n-m)/2)
  // differing first elements: both endpoints mismatch, except that for
  // n = m = 1 they are the same aligned pair and the cost is 1
  if (n == m) return n == 1 ? 1 : 2;
  return 1 + (n - m) / 2;
}

std::uint64_t binary_dtw_sq(const TimeSeries& x, const TimeSeries& y) {
  require_binary_series(x);
  require_binary_series(y);
  if (!is_condensed(x)) throw std::invalid_argument("binary_dtw_sq expects a condensed first series");
  if (x.size() < y.size())
    throw std::invalid_argument("binary_dtw_sq expects len(x) >= len(y)");
  return binary_condensed_dtw_sq(x, condense(y));
}

MeanResult binary_mean(const Sample& s) {
  require_sample(s);
  for (const auto& x : s.series) require_binary_series(x);
  const std::size_t n = s.max_length();

  // A condensed binary series is fixed by its first element and length, so
  // lengths 1..n+1 give 2(n+1) candidates. Each is scored with the full DTW
  // recurrence; the enumeration order implements the tie-break.
  MeanResult best;
  best.frechet = std::numeric_limits<double>::infinity();
  for (std::size_t len = 1; len <= n + 1; ++len) {
    for (int first : {0, 1}) {
      TimeSeries cand(len);
      for (std::size_t i = 0; i < len; ++i) cand[i] = static_cast<double>((first + i) % 2);
      double f = frechet_value(cand, s);
      if (f < best.frechet) {
        best.frechet = f;
        best.mean = std::move(cand);
      }
    }
  }
  return best;
}

}  // namespace dtwmean
