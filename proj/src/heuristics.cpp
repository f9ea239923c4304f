#include "dtwmean/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dtwmean/dtw.hpp"
#include "dtwmean/rng.hpp"

namespace dtwmean {

namespace {

bool equal_lengths(const Sample& s) {
  for (const auto& x : s.series) {
    if (x.size() != s.series.front().size()) return false;
  }
  return true;
}

std::size_t target_length(const Sample& s) {
  return equal_lengths(s) ? s.series.front().size() : s.max_length();
}

void add_path_subgradient(const TimeSeries& z, const TimeSeries& x, const WarpingPath& p,
                          double w, std::vector<double>& g) {
  for (const auto& [i, t] : p.pairs) {
    g[i - 1] += 2.0 * w * (z[i - 1] - x[t - 1]);
  }
}

double step_size(const HeuristicConfig& cfg, std::size_t epoch) {
  // linear decay from step0 to step0/10 over the first 100 epochs
  if (epoch >= 100) return cfg.step0 / 10.0;
  double f = epoch == 0 ? 0.0 : static_cast<double>(epoch) / 99.0;
  return cfg.step0 * (1.0 - 0.9 * f);
}

}  // namespace

MeanResult mal_mean(const TimeSeries& x, const TimeSeries& y) {
  DtwResult r = dtw_sq(x, y);
  MeanResult out;
  out.mean.reserve(r.path.length());
  for (const auto& [i, j] : r.path.pairs) {
    out.mean.push_back((x[i - 1] + y[j - 1]) / 2.0);
  }
  out.frechet = frechet_value(out.mean, Sample::with_unit_weights({x, y}));
  return out;
}

TimeSeries initial_mean(const Sample& s, const HeuristicConfig& cfg) {
  require_sample(s);
  if (cfg.init_series) {
    require_series(*cfg.init_series);
    return *cfg.init_series;
  }
  Rng rng = Rng(cfg.seed).split(0x1d17);
  switch (cfg.init) {
    case InitMethod::kArithmeticMean: {
      if (!equal_lengths(s))
        throw std::invalid_argument("arithmetic-mean init requires equal-length series");
      const std::size_t n = s.series.front().size();
      double wsum = std::accumulate(s.weights.begin(), s.weights.end(), 0.0);
      TimeSeries z(n, 0.0);
      for (std::size_t j = 0; j < s.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) z[i] += s.weights[j] * s.series[j][i];
      }
      for (double& v : z) v /= wsum;
      return z;
    }
    case InitMethod::kRandomMember:
      return s.series[rng.next_below(s.size())];
    case InitMethod::kRandomNormal: {
      TimeSeries z(target_length(s));
      for (double& v : z) v = rng.next_normal();
      return z;
    }
  }
  throw std::invalid_argument("unknown init method");
}

std::vector<double> frechet_subgradient(const TimeSeries& z, const Sample& s,
                                        std::span<const WarpingPath> paths) {
  require_series(z);
  require_sample(s);
  if (paths.size() != s.size())
    throw std::invalid_argument("frechet_subgradient: one path per series required");
  std::vector<double> g(z.size(), 0.0);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!validate_path(paths[j], z.size(), s.series[j].size()))
      throw std::invalid_argument("frechet_subgradient: invalid warping path");
    add_path_subgradient(z, s.series[j], paths[j], s.weights[j], g);
  }
  return g;
}

MeanResult dba(const Sample& s, const HeuristicConfig& cfg, std::vector<double>* f_trace) {
  require_sample(s);
  if (cfg.epochs < 1) throw std::invalid_argument("epochs must be at least 1");
  TimeSeries z = initial_mean(s, cfg);
  const std::size_t k = s.size();
  const std::size_t m = z.size();

  std::vector<WarpingPath> paths(k);
  auto evaluate = [&](const TimeSeries& cur) {
    double f = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      DtwResult r = dtw_sq(cur, s.series[j]);
      f += s.weights[j] * r.sq_distance;
      paths[j] = std::move(r.path);
    }
    return f;
  };

  double f = evaluate(z);
  if (f_trace) f_trace->push_back(f);
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    // each element becomes the weighted average of everything aligned to it
    std::vector<double> num(m, 0.0);
    std::vector<double> den(m, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
      for (const auto& [i, t] : paths[j].pairs) {
        num[i - 1] += s.weights[j] * s.series[j][t - 1];
        den[i - 1] += s.weights[j];
      }
    }
    for (std::size_t i = 0; i < m; ++i) z[i] = num[i] / den[i];

    double f_new = evaluate(z);
    if (f_trace) f_trace->push_back(f_new);
    double improvement = f - f_new;
    f = f_new;
    if (improvement < cfg.tol) break;
  }

  MeanResult out;
  out.mean = std::move(z);
  out.frechet = f;
  return out;
}

namespace {

MeanResult subgradient_descent(const Sample& s, const HeuristicConfig& cfg, bool stochastic) {
  require_sample(s);
  if (cfg.epochs < 1) throw std::invalid_argument("epochs must be at least 1");
  if (!(cfg.step0 > 0.0)) throw std::invalid_argument("step0 must be positive");
  Rng perm_rng = Rng(cfg.seed).split(0x5e0);

  TimeSeries z = initial_mean(s, cfg);
  const std::size_t k = s.size();
  const std::size_t m = z.size();

  TimeSeries best = z;
  double best_f = frechet_value(z, s);

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> g(m);

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    double eta = step_size(cfg, epoch);
    if (stochastic) {
      for (std::size_t i = k; i-- > 1;) {
        std::swap(order[i], order[perm_rng.next_below(i + 1)]);
      }
      for (std::size_t idx = 0; idx < k; ++idx) {
        std::size_t j = order[idx];
        WarpingPath p = dtw_sq(z, s.series[j]).path;
        std::fill(g.begin(), g.end(), 0.0);
        add_path_subgradient(z, s.series[j], p, s.weights[j], g);
        for (std::size_t i = 0; i < m; ++i) z[i] -= eta * g[i];
      }
    } else {
      std::fill(g.begin(), g.end(), 0.0);
      for (std::size_t j = 0; j < k; ++j) {
        WarpingPath p = dtw_sq(z, s.series[j]).path;
        add_path_subgradient(z, s.series[j], p, s.weights[j], g);
      }
      for (std::size_t i = 0; i < m; ++i) z[i] -= eta * g[i];
    }
    double f = frechet_value(z, s);
    if (f < best_f) {
      best_f = f;
      best = z;
    }
  }

  MeanResult out;
  out.mean = std::move(best);
  out.frechet = best_f;
  return out;
}

}  // namespace

MeanResult ssg(const Sample& s, const HeuristicConfig& cfg) {
  return subgradient_descent(s, cfg, /*stochastic=*/true);
}

MeanResult bsg(const Sample& s, const HeuristicConfig& cfg) {
  return subgradient_descent(s, cfg, /*stochastic=*/false);
}

MeanResult psa_exact(const Sample& s, const EdpOptions& opts) {
  require_sample(s);
  if (s.size() < 2) throw std::invalid_argument("psa needs at least two series");

  struct PoolEntry {
    TimeSeries series;
    double count;
  };
  std::vector<PoolEntry> pool;
  pool.reserve(s.size());
  for (const auto& x : s.series) pool.push_back({x, 1.0});

  while (pool.size() > 1) {
    std::size_t best_a = 0;
    std::size_t best_b = 1;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < pool.size(); ++a) {
      for (std::size_t b = a + 1; b < pool.size(); ++b) {
        double d = dtw_sq(pool[a].series, pool[b].series).sq_distance;
        if (d < best_d) {
          best_d = d;
          best_a = a;
          best_b = b;
        }
      }
    }
    Sample pair;
    pair.series = {pool[best_a].series, pool[best_b].series};
    pair.weights = {pool[best_a].count, pool[best_b].count};
    MeanResult merged = edp_mean(pair, opts);
    pool[best_a] = {std::move(merged.mean), pair.weights[0] + pair.weights[1]};
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_b));
  }

  MeanResult out;
  out.mean = std::move(pool.front().series);
  out.frechet = frechet_value(out.mean, s);
  return out;
}

}  // namespace dtwmean
