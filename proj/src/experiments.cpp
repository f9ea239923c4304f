#include "dtwmean/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "dtwmean/heuristics.hpp"
#include "dtwmean/io.hpp"

namespace dtwmean {

TimeSeries random_walk(std::size_t n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random walk length must be at least 1");
  TimeSeries x(n);
  double cur = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cur += rng.next_normal();
    x[i] = cur;
  }
  return x;
}

double error_percentage(double f_algo, double f_star) {
  if (!(f_star > 0.0))
    throw std::invalid_argument("error_percentage: degenerate instance with optimum <= 0");
  return 100.0 * (f_algo - f_star) / f_star;
}

double length_deviation(double mean_len_avg, std::size_t n) {
  if (n < 1) throw std::invalid_argument("length_deviation: n must be at least 1");
  return 100.0 * (mean_len_avg - static_cast<double>(n)) / static_cast<double>(n);
}

std::vector<std::pair<double, double>> performance_profile(std::span<const double> errors,
                                                           std::span<const double> taus) {
  if (errors.empty()) throw std::invalid_argument("performance_profile: no errors given");
  std::vector<double> sorted(errors.begin(), errors.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<double, double>> out;
  out.reserve(taus.size());
  for (double tau : taus) {
    auto it = std::upper_bound(sorted.begin(), sorted.end(), tau);
    double p = static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
    out.emplace_back(tau, p);
  }
  return out;
}

ErrorDecomposition error_decomposition(const Sample& s, double f_algo, std::size_t q,
                                       const EdpOptions& opts) {
  double f_star = edp_mean(s, opts).frechet;
  double f_q = edp_mean_constrained(s, q, opts).frechet;
  ErrorDecomposition d;
  d.approx = f_algo - f_q;
  d.structural = f_q - f_star;
  return d;
}

std::vector<std::pair<std::size_t, double>> sweep_constrained_variation(const Sample& s,
                                                                        std::size_t q_max,
                                                                        const EdpOptions& opts) {
  std::vector<double> values = edp_constrained_sweep(s, q_max, opts);
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(values.size());
  for (std::size_t q = 1; q <= q_max; ++q) out.emplace_back(q, values[q - 1]);
  return out;
}

UniquenessStats uniqueness_stats(std::span<const Sample> samples, const EdpOptions& opts) {
  if (samples.empty()) throw std::invalid_argument("uniqueness_stats: no samples given");
  std::size_t unique = 0;
  std::size_t total = 0;
  std::size_t max_count = 0;
  for (const Sample& s : samples) {
    std::size_t count = edp_all_means(s, opts).size();
    unique += count == 1 ? 1 : 0;
    total += count;
    max_count = std::max(max_count, count);
  }
  UniquenessStats st;
  st.pct_unique = 100.0 * static_cast<double>(unique) / static_cast<double>(samples.size());
  st.avg_count = static_cast<double>(total) / static_cast<double>(samples.size());
  st.max_count = max_count;
  return st;
}

std::vector<Sample> generate_samples(const ExperimentSpec& spec) {
  if (spec.count < 1) throw std::invalid_argument("sample count must be at least 1");
  Rng master(spec.seed);
  std::vector<Sample> samples;

  auto walk_sample = [&](std::size_t sample_id, std::size_t k, std::size_t n) {
    Rng stream = master.split(sample_id);
    Sample s;
    for (std::size_t j = 0; j < k; ++j) {
      Rng wr = stream.split(j);
      s.series.push_back(random_walk(n, wr));
    }
    s.weights.assign(k, 1.0);
    return s;
  };

  switch (spec.scheme) {
    case ExperimentSpec::Scheme::kRwPairs: {
      if (spec.n_list.empty()) throw std::invalid_argument("rw-pairs needs a non-empty n list");
      std::size_t id = 0;
      for (std::size_t n : spec.n_list) {
        for (std::size_t c = 0; c < spec.count; ++c) samples.push_back(walk_sample(id++, 2, n));
      }
      break;
    }
    case ExperimentSpec::Scheme::kRwK: {
      if (spec.k_list.empty()) throw std::invalid_argument("rw-k needs a non-empty k list");
      std::size_t id = 0;
      for (std::size_t k : spec.k_list) {
        if (k < 1) throw std::invalid_argument("rw-k sample size must be at least 1");
        for (std::size_t c = 0; c < spec.count; ++c)
          samples.push_back(walk_sample(id++, k, spec.walk_length));
      }
      break;
    }
    case ExperimentSpec::Scheme::kCsvSample: {
      std::ifstream in(spec.csv_path);
      if (!in) throw std::invalid_argument("cannot open series pool: " + spec.csv_path);
      Sample pool = read_sample_csv(in);
      if (pool.size() < spec.subset_size)
        throw std::invalid_argument("series pool smaller than the requested subset size");
      for (std::size_t c = 0; c < spec.count; ++c) {
        Rng stream = master.split(c);
        // partial Fisher-Yates over the pool indices
        std::vector<std::size_t> idx(pool.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        Sample s;
        for (std::size_t j = 0; j < spec.subset_size; ++j) {
          std::size_t pick = j + stream.next_below(idx.size() - j);
          std::swap(idx[j], idx[pick]);
          s.series.push_back(pool.series[idx[j]]);
        }
        s.weights.assign(spec.subset_size, 1.0);
        samples.push_back(std::move(s));
      }
      break;
    }
  }
  return samples;
}

std::map<std::string, AlgoSummary> summarize(std::span<const RunRecord> records) {
  if (records.empty()) throw std::invalid_argument("summarize: no records given");
  std::map<std::string, std::vector<double>> errors;
  for (const RunRecord& r : records) errors[r.algo].push_back(r.error_pct);
  std::map<std::string, AlgoSummary> out;
  for (const auto& [algo, e] : errors) {
    AlgoSummary s;
    double sum = 0.0;
    for (double v : e) {
      sum += v;
      s.max = std::max(s.max, v);
      if (v <= 1e-7) ++s.exact_count;
    }
    s.avg = sum / static_cast<double>(e.size());
    double var = 0.0;
    for (double v : e) var += (v - s.avg) * (v - s.avg);
    s.std_dev = std::sqrt(var / static_cast<double>(e.size()));
    out[algo] = s;
  }
  return out;
}

namespace {

constexpr double kSsgStepGrid[] = {0.25, 0.2, 0.15, 0.1};

const char* init_name(InitMethod m) {
  switch (m) {
    case InitMethod::kArithmeticMean: return "arith";
    case InitMethod::kRandomMember: return "member";
    case InitMethod::kRandomNormal: return "normal";
  }
  return "?";
}

struct BestRun {
  double f = std::numeric_limits<double>::infinity();
  double wall_ms = 0.0;
  std::size_t mean_len = 0;
  std::string params;
};

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::uint64_t config_seed(std::uint64_t base, std::size_t sample_id, std::size_t cfg_idx) {
  Rng r = Rng(base).split(sample_id).split(0xc0f1 + cfg_idx);
  return r.next_u64();
}

template <typename RunFn>
void consider(BestRun& best, std::string params, RunFn&& run) {
  double t0 = now_ms();
  MeanResult r;
  try {
    r = run();
  } catch (const std::invalid_argument&) {
    return;  // configuration not applicable to this sample (e.g. ragged lengths)
  }
  double ms = now_ms() - t0;
  if (r.frechet < best.f) {
    best.f = r.frechet;
    best.wall_ms = ms;
    best.mean_len = r.mean.size();
    best.params = std::move(params);
  }
}

std::vector<RunRecord> bench_one(const Sample& s, std::size_t sample_id,
                                 const BenchOptions& opts) {
  const std::size_t k = s.size();
  const std::size_t n = s.max_length();
  std::vector<RunRecord> rows;

  double t0 = now_ms();
  MeanResult exact = edp_mean(s);
  double edp_ms = now_ms() - t0;
  const double f_star = exact.frechet;

  struct Pending {
    std::string algo;
    BestRun best;
    std::size_t q;  // solution length whose F*_q splits the error
  };
  std::vector<Pending> pending;

  for (const std::string& algo : opts.algos) {
    BestRun best;
    if (algo == "mal") {
      if (k != 2) continue;
      consider(best, "", [&] { return mal_mean(s.series[0], s.series[1]); });
    } else if (algo == "dba") {
      std::size_t cfg_idx = 0;
      for (InitMethod init :
           {InitMethod::kArithmeticMean, InitMethod::kRandomMember, InitMethod::kRandomNormal}) {
        HeuristicConfig cfg;
        cfg.init = init;
        cfg.seed = config_seed(opts.spec.seed, sample_id, cfg_idx++);
        consider(best, std::string("init=") + init_name(init), [&] { return dba(s, cfg); });
      }
    } else if (algo == "bsg") {
      std::size_t cfg_idx = 100;
      for (InitMethod init :
           {InitMethod::kArithmeticMean, InitMethod::kRandomMember, InitMethod::kRandomNormal}) {
        HeuristicConfig cfg;
        cfg.init = init;
        cfg.seed = config_seed(opts.spec.seed, sample_id, cfg_idx++);
        std::string params = std::string("init=") + init_name(init) +
                             ";step0=" + format_double(cfg.step0);
        consider(best, params, [&] { return bsg(s, cfg); });
      }
    } else if (algo == "ssg") {
      std::size_t cfg_idx = 200;
      for (InitMethod init :
           {InitMethod::kArithmeticMean, InitMethod::kRandomMember, InitMethod::kRandomNormal}) {
        for (double step0 : kSsgStepGrid) {
          HeuristicConfig cfg;
          cfg.init = init;
          cfg.step0 = step0;
          cfg.seed = config_seed(opts.spec.seed, sample_id, cfg_idx++);
          std::string params =
              std::string("init=") + init_name(init) + ";step0=" + format_double(step0);
          consider(best, params, [&] { return ssg(s, cfg); });
        }
      }
    } else if (algo == "psa") {
      if (k < 2) continue;
      consider(best, "", [&] { return psa_exact(s); });
    } else {
      throw std::invalid_argument("unknown bench algorithm: " + algo);
    }
    if (best.mean_len == 0) continue;  // no applicable configuration
    pending.push_back({algo, std::move(best), 0});
    pending.back().q = pending.back().best.mean_len;
  }

  std::size_t q_max = 1;
  for (const Pending& p : pending) q_max = std::max(q_max, p.q);
  std::vector<double> f_q = edp_constrained_sweep(s, q_max);

  auto make_row = [&](const std::string& algo, double f_algo, double approx, double structural,
                      double wall, const std::string& params) {
    RunRecord r;
    r.sample_id = sample_id;
    r.algo = algo;
    r.n = n;
    r.k = k;
    r.f_star = f_star;
    r.f_algo = f_algo;
    r.error_pct = f_star > 0.0 ? error_percentage(f_algo, f_star) : 0.0;
    r.approx_err = approx;
    r.struct_err = structural;
    r.wall_ms = opts.timing ? wall : 0.0;
    r.params = params;
    return r;
  };

  rows.push_back(make_row("edp", f_star, 0.0, 0.0, edp_ms, ""));
  for (const Pending& p : pending) {
    double fq = f_q[p.q - 1];
    rows.push_back(make_row(p.algo, p.best.f, p.best.f - fq, fq - f_star, p.best.wall_ms,
                            p.best.params));
  }
  return rows;
}

}  // namespace

std::vector<RunRecord> run_bench(const BenchOptions& opts) {
  std::vector<Sample> samples = generate_samples(opts.spec);
  std::vector<std::vector<RunRecord>> per_sample(samples.size());

  int threads = std::max(1, opts.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < samples.size(); ++i) per_sample[i] = bench_one(samples[i], i, opts);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= samples.size()) return;
        per_sample[i] = bench_one(samples[i], i, opts);
      }
    };
    std::vector<std::thread> ts;
    for (int t = 0; t < threads; ++t) ts.emplace_back(worker);
    for (auto& t : ts) t.join();
  }

  std::vector<RunRecord> rows;
  for (auto& batch : per_sample) {
    rows.insert(rows.end(), std::make_move_iterator(batch.begin()),
                std::make_move_iterator(batch.end()));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const RunRecord& a, const RunRecord& b) {
    return a.sample_id != b.sample_id ? a.sample_id < b.sample_id : a.algo < b.algo;
  });
  return rows;
}

void write_bench_csv(std::ostream& os, std::span<const RunRecord> records) {
  os << "sample_id,algo,n,k,f_star,f_algo,error_pct,approx_err,struct_err,wall_ms,params\n";
  for (const RunRecord& r : records) {
    os << r.sample_id << ',' << r.algo << ',' << r.n << ',' << r.k << ','
       << format_double(r.f_star) << ',' << format_double(r.f_algo) << ','
       << format_double(r.error_pct) << ',' << format_double(r.approx_err) << ','
       << format_double(r.struct_err) << ',' << format_double(r.wall_ms) << ',' << r.params
       << '\n';
  }
}

std::vector<RunRecord> read_bench_csv(std::istream& is) {
  std::vector<RunRecord> out;
  std::string line;
  bool first = true;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.rfind("sample_id,", 0) == 0) continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() == 10) fields.push_back("");  // empty trailing params
    if (fields.size() != 11)
      throw std::invalid_argument("bench csv: malformed line " + std::to_string(lineno));
    RunRecord r;
    try {
      r.sample_id = std::stoul(fields[0]);
      r.algo = fields[1];
      r.n = std::stoul(fields[2]);
      r.k = std::stoul(fields[3]);
      r.f_star = std::stod(fields[4]);
      r.f_algo = std::stod(fields[5]);
      r.error_pct = std::stod(fields[6]);
      r.approx_err = std::stod(fields[7]);
      r.struct_err = std::stod(fields[8]);
      r.wall_ms = std::stod(fields[9]);
    } catch (const std::exception&) {
      throw std::invalid_argument("bench csv: bad number on line " + std::to_string(lineno));
    }
    r.params = fields[10];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace dtwmean
