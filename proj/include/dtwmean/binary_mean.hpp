#pragma once

#include <cstdint>

#include "dtwmean/exact_mean.hpp"

namespace dtwmean {

bool is_binary_series(const TimeSeries& x);
void require_binary_series(const TimeSeries& x);

/// Closed-form squared DTW distance between two condensed binary series.
/// Symmetric; swaps internally so the longer series leads.
std::uint64_t binary_condensed_dtw_sq(const TimeSeries& x, const TimeSeries& y);

/// Squared DTW distance between a condensed binary x and an arbitrary binary
/// y with len(x) >= len(y). Equals the closed-form distance to the
/// condensation of y.
std::uint64_t binary_dtw_sq(const TimeSeries& x, const TimeSeries& y);

/// Exact binary mean: evaluates all condensed binary candidates of length at
/// most n+1 (n = longest input) with the full DTW recurrence. Ties broken by
/// shorter length, then leading 0.
MeanResult binary_mean(const Sample& s);

}  // namespace dtwmean
