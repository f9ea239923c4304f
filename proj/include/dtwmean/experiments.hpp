#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "dtwmean/exact_mean.hpp"
#include "dtwmean/rng.hpp"

namespace dtwmean {

/// Random walk x_i = x_{i-1} + eps_i with i.i.d. standard normal increments;
/// x_1 is itself a draw.
TimeSeries random_walk(std::size_t n, Rng& rng);

/// E = 100 * (f_algo - f_star) / f_star. Requires f_star > 0.
double error_percentage(double f_algo, double f_star);

/// 100 * (mean_len_avg - n) / n.
double length_deviation(double mean_len_avg, std::size_t n);

/// Empirical CDF of the error percentages, evaluated at each tau
/// (taus sorted ascending).
std::vector<std::pair<double, double>> performance_profile(std::span<const double> errors,
                                                           std::span<const double> taus);

struct ErrorDecomposition {
  double approx = 0.0;      // f_algo - F*_q
  double structural = 0.0;  // F*_q - F_*
};

/// Splits the total error of a length-q solution with value f_algo into the
/// approximation and structural parts.
ErrorDecomposition error_decomposition(const Sample& s, double f_algo, std::size_t q,
                                       const EdpOptions& opts = {});

/// (q, F*_q) for q = 1..q_max.
std::vector<std::pair<std::size_t, double>> sweep_constrained_variation(
    const Sample& s, std::size_t q_max, const EdpOptions& opts = {});

struct UniquenessStats {
  double pct_unique = 0.0;
  double avg_count = 0.0;
  std::size_t max_count = 0;
};

/// Mean-multiplicity statistics over a batch of samples, counted with
/// edp_all_means. A sample is unique iff exactly one mean is returned.
UniquenessStats uniqueness_stats(std::span<const Sample> samples, const EdpOptions& opts = {});

struct ExperimentSpec {
  enum class Scheme { kRwPairs, kRwK, kCsvSample };
  Scheme scheme = Scheme::kRwPairs;
  std::vector<std::size_t> n_list = {5, 10, 15, 20};  // rw-pairs: walk lengths
  std::vector<std::size_t> k_list = {2, 3};           // rw-k: sample sizes
  std::size_t walk_length = 6;                        // rw-k: walk length
  std::size_t count = 100;                            // samples per list entry
  std::string csv_path;                               // csv-sample: series pool
  std::size_t subset_size = 2;                        // csv-sample: k per sample
  std::uint64_t seed = 0;
};

/// Deterministic sample generation; each sample draws from its own stream, so
/// the output is independent of generation order.
std::vector<Sample> generate_samples(const ExperimentSpec& spec);

struct RunRecord {
  std::size_t sample_id = 0;
  std::string algo;
  std::size_t n = 0;
  std::size_t k = 0;
  double f_star = 0.0;
  double f_algo = 0.0;
  double error_pct = 0.0;
  double approx_err = 0.0;
  double struct_err = 0.0;
  double wall_ms = 0.0;
  std::string params;
};

struct AlgoSummary {
  double avg = 0.0;
  double std_dev = 0.0;  // population standard deviation
  double max = 0.0;
  std::size_t exact_count = 0;  // records with error <= 1e-7
};

/// Per-algorithm error statistics.
std::map<std::string, AlgoSummary> summarize(std::span<const RunRecord> records);

struct BenchOptions {
  ExperimentSpec spec;
  /// Algorithms to run; "mal" is skipped on samples with k != 2. An "edp"
  /// row is always emitted.
  std::vector<std::string> algos = {"dba", "bsg", "ssg", "mal"};
  int threads = 1;
  /// With timing off, wall_ms is written as 0 so output is byte-reproducible.
  bool timing = true;
};

/// Runs the benchmark: exact optimum plus best-of-configuration heuristics
/// per sample. Rows are sorted by (sample_id, algo).
std::vector<RunRecord> run_bench(const BenchOptions& opts);

void write_bench_csv(std::ostream& os, std::span<const RunRecord> records);
std::vector<RunRecord> read_bench_csv(std::istream& is);

}  // namespace dtwmean
