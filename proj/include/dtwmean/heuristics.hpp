#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "dtwmean/exact_mean.hpp"

namespace dtwmean {

enum class InitMethod { kArithmeticMean, kRandomMember, kRandomNormal };

struct HeuristicConfig {
  InitMethod init = InitMethod::kArithmeticMean;
  std::size_t epochs = 200;
  double step0 = 0.1;  // initial step size of the ssg/bsg schedule
  double tol = 1e-6;   // dba stops once the Frechet improvement drops below this
  std::uint64_t seed = 0;
  /// Explicit starting series; overrides init when set.
  std::optional<TimeSeries> init_series;
};

/// Averages two series element-wise along one optimal warping path. Refuted
/// as an exact method; kept as the MAL baseline.
MeanResult mal_mean(const TimeSeries& x, const TimeSeries& y);

/// Starting series for the fixed-length heuristics: the (weighted) arithmetic
/// mean of the sample, a random member, or i.i.d. standard normal values.
TimeSeries initial_mean(const Sample& s, const HeuristicConfig& cfg);

/// Subgradient of sum_j w_j * C_{p_j}(z, x_j) with all paths held fixed.
std::vector<double> frechet_subgradient(const TimeSeries& z, const Sample& s,
                                        std::span<const WarpingPath> paths);

/// DTW barycenter averaging: alternates optimal alignments with closed-form
/// element updates; stops after cfg.epochs or when the improvement is below
/// cfg.tol. When f_trace is given, every iterate's Frechet value is appended
/// (initial value first).
MeanResult dba(const Sample& s, const HeuristicConfig& cfg, std::vector<double>* f_trace = nullptr);

/// Stochastic subgradient descent: one step per series per epoch, series
/// visited in a seeded random permutation, step size decayed linearly from
/// step0 to step0/10 over the first 100 epochs. Returns the best iterate,
/// evaluated once per epoch.
MeanResult ssg(const Sample& s, const HeuristicConfig& cfg);

/// Batch subgradient descent: one summed step per epoch, same schedule and
/// best-so-far tracking as ssg.
MeanResult bsg(const Sample& s, const HeuristicConfig& cfg);

/// Progressive alignment with exact pairwise means: repeatedly replaces the
/// two closest pool members by their exact weighted mean, weights counting
/// the series merged so far.
MeanResult psa_exact(const Sample& s, const EdpOptions& opts = {});

}  // namespace dtwmean
