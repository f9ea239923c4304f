#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "dtwmean/core.hpp"

namespace dtwmean {

struct MeanResult {
  TimeSeries mean;
  double frechet = 0.0;
  /// One warping path per sample series, of order (len(mean), n_j).
  std::optional<std::vector<WarpingPath>> paths;
};

/// Weighted Frechet function: sum_j w_j * dtw_sq(z, x_j).
double frechet_value(const TimeSeries& z, const Sample& s);

struct SegmentStats {
  double mu = 0.0;     // weighted average over the aligned segments
  double sigma = 0.0;  // weighted sum of squared deviations from mu
};

/// Stats of the sample elements x_j[lo_j..hi_j] (1-based, inclusive) under
/// the assumption that all of them are aligned with one mean element.
/// mu minimizes sigma over all possible element values.
SegmentStats aligned_segment_stats(const Sample& s, std::span<const std::size_t> lo,
                                   std::span<const std::size_t> hi);

struct EdpOptions {
  /// Rejects instances whose k-dimensional table would exceed this many cells.
  std::uint64_t max_cells = std::uint64_t{1} << 31;
  /// Rejects instances whose estimated recursion work, prod_j n_j(n_j+1)/2
  /// (scaled by q for the constrained variants), exceeds this bound.
  std::uint64_t max_work = std::uint64_t{1} << 31;
};

/// Exact dynamic program: global minimizer of the weighted Frechet function
/// over all finite time series. The returned mean carries no redundant
/// element; ties are broken by the lexicographically first recursion choice.
MeanResult edp_mean(const Sample& s, const EdpOptions& opts = {});

/// Exact optimum over time series of length exactly q (the constrained
/// Frechet variation F*_q). Redundant elements are permitted here.
MeanResult edp_mean_constrained(const Sample& s, std::size_t q, const EdpOptions& opts = {});

/// F*_q for every q = 1..q_max (entry q-1) from a single table fill.
std::vector<double> edp_constrained_sweep(const Sample& s, std::size_t q_max,
                                          const EdpOptions& opts = {});

/// Every distinct non-redundant optimal mean. Frechet ties are accepted
/// within relative tolerance 1e-9; means are deduplicated element-wise.
std::vector<MeanResult> edp_all_means(const Sample& s, const EdpOptions& opts = {});

/// Value table of the dynamic program: entry (i_1..i_k) holds the optimal
/// Frechet value of the prefix instance x_j[1..i_j].
struct DpTable {
  std::vector<std::size_t> dims;
  std::vector<double> values;  // lexicographic layout, last index fastest
  double value_at(std::span<const std::size_t> idx) const;  // 1-based
};
DpTable edp_table(const Sample& s, const EdpOptions& opts = {});

/// Brute-force oracle: for every mean length up to max_len enumerates all
/// k-tuples of warping paths and evaluates the closed-form best mean per
/// alignment. Throws ResourceError when the tuple count gets out of hand.
MeanResult mean_brute(const Sample& s, std::size_t max_len);

/// As mean_brute, but collects every optimal mean whose alignment tuple
/// leaves no mean element redundant.
std::vector<TimeSeries> mean_brute_all(const Sample& s, std::size_t max_len);

}  // namespace dtwmean
