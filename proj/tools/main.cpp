#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "dtwmean/binary_mean.hpp"
#include "dtwmean/dtw.hpp"
#include "dtwmean/experiments.hpp"
#include "dtwmean/heuristics.hpp"
#include "dtwmean/io.hpp"

namespace {

using namespace dtwmean;

std::vector<std::size_t> parse_size_list(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      long long v = std::stoll(tok);
      if (v < 1) throw std::invalid_argument("");
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad list entry '" + tok + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

Sample drop_zero_weights(Sample s) {
  Sample out;
  std::size_t dropped = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s.weights[j] > 0.0) {
      out.series.push_back(std::move(s.series[j]));
      out.weights.push_back(s.weights[j]);
    } else {
      ++dropped;
    }
  }
  if (dropped > 0) {
    std::cerr << "warning: dropping " << dropped << " zero-weight series\n";
  }
  return out;
}

void print_mean(const MeanResult& r, bool with_paths) {
  std::string line = "mean";
  for (double v : r.mean) line += ' ' + format_double(v);
  std::cout << line << '\n';
  std::cout << "frechet " << format_double(r.frechet) << '\n';
  if (with_paths && r.paths) {
    for (std::size_t j = 0; j < r.paths->size(); ++j) {
      std::cout << "path " << j + 1 << ' ' << format_path((*r.paths)[j]) << '\n';
    }
  }
}

struct MeanArgs {
  std::string file;
  std::optional<std::string> weights;
  long long constrain_length = -1;
  bool all = false;
  bool paths = false;
  bool force = false;
  std::string emit_alignment;
};

int run_mean(const MeanArgs& a) {
  Sample s = drop_zero_weights(load_sample(a.file, a.weights));
  EdpOptions opts;
  if (a.force) {
    opts.max_cells = std::numeric_limits<std::uint64_t>::max();
    opts.max_work = std::numeric_limits<std::uint64_t>::max();
  }
  if (a.all) {
    std::vector<MeanResult> means = edp_all_means(s, opts);
    std::cout << "count " << means.size() << '\n';
    for (const MeanResult& m : means) {
      std::string line = "mean";
      for (double v : m.mean) line += ' ' + format_double(v);
      std::cout << line << '\n';
    }
    std::cout << "frechet " << format_double(means.front().frechet) << '\n';
    return 0;
  }
  MeanResult r;
  if (a.constrain_length >= 0) {
    if (a.constrain_length < 1)
      throw std::invalid_argument("--constrain-length must be at least 1");
    r = edp_mean_constrained(s, static_cast<std::size_t>(a.constrain_length), opts);
  } else {
    r = edp_mean(s, opts);
  }
  print_mean(r, a.paths);
  if (!a.emit_alignment.empty()) {
    std::ofstream out(a.emit_alignment);
    if (!out) throw std::invalid_argument("cannot open output file: " + a.emit_alignment);
    write_alignment_csv(out, r);
  }
  return 0;
}

InitMethod parse_init(const std::string& name) {
  if (name == "arith") return InitMethod::kArithmeticMean;
  if (name == "member") return InitMethod::kRandomMember;
  if (name == "normal") return InitMethod::kRandomNormal;
  throw std::invalid_argument("unknown init method '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and heuristic means of time series under dynamic time warping"};
  app.require_subcommand(1);

  // dist
  std::string dist_file;
  auto* dist = app.add_subcommand("dist", "Squared DTW distance and an optimal warping path");
  dist->add_option("file", dist_file, "Input sample (two series)")->required();

  // mean
  MeanArgs mean_args;
  std::string mean_weights;
  auto* mean = app.add_subcommand("mean", "Exact mean via the dynamic program");
  mean->add_option("file", mean_args.file, "Input sample")->required();
  mean->add_option("--weights", mean_weights, "Comma-separated weights override");
  mean->add_option("--constrain-length", mean_args.constrain_length,
                   "Restrict the mean to exactly this length");
  auto* all_flag = mean->add_flag("--all", mean_args.all, "Print every non-redundant optimal mean");
  auto* paths_flag =
      mean->add_flag("--paths", mean_args.paths, "Print one optimal path per series");
  mean->add_flag("--force", mean_args.force, "Ignore the instance-size guard");
  mean->add_option("--emit-alignment", mean_args.emit_alignment,
                   "Write the alignment trace (mean_index,series_index,series_position) as CSV");
  all_flag->excludes(paths_flag);

  // binary-mean
  std::string bin_file, bin_weights;
  auto* bin = app.add_subcommand("binary-mean", "Exact mean for 0/1 series");
  bin->add_option("file", bin_file, "Input sample (binary values)")->required();
  bin->add_option("--weights", bin_weights, "Comma-separated weights override");

  // heuristic
  std::string heur_algo, heur_file, heur_init = "arith", heur_weights;
  std::size_t heur_epochs = 200;
  double heur_step0 = 0.1, heur_tol = 1e-6;
  std::uint64_t heur_seed = 0;
  auto* heur = app.add_subcommand("heuristic", "Run one heuristic (mal|dba|ssg|bsg|psa)");
  heur->add_option("algo", heur_algo, "mal|dba|ssg|bsg|psa")->required();
  heur->add_option("file", heur_file, "Input sample")->required();
  heur->add_option("--init", heur_init, "arith|member|normal (default arith)");
  heur->add_option("--epochs", heur_epochs, "Epoch budget (default 200)");
  heur->add_option("--step0", heur_step0, "Initial step size for ssg/bsg (default 0.1)");
  heur->add_option("--tol", heur_tol, "Convergence tolerance for dba (default 1e-6)");
  heur->add_option("--seed", heur_seed, "Random seed");
  heur->add_option("--weights", heur_weights, "Comma-separated weights override");

  // bench
  std::string bench_scheme = "rw-pairs", bench_nlist = "5,10,15,20", bench_klist = "2,3";
  std::string bench_pool, bench_algos = "dba,bsg,ssg,mal", bench_out;
  std::size_t bench_count = 100, bench_n = 6, bench_k = 2;
  std::uint64_t bench_seed = 0;
  int bench_threads = 1;
  bool bench_no_timing = false, bench_summary = false;
  auto* bench = app.add_subcommand("bench", "Benchmark heuristics against the exact optimum");
  bench->add_option("--scheme", bench_scheme, "rw-pairs|rw-k|csv-sample (default rw-pairs)");
  bench->add_option("--n-list", bench_nlist, "Walk lengths for rw-pairs (default 5,10,15,20)");
  bench->add_option("--k-list", bench_klist, "Sample sizes for rw-k (default 2,3)");
  bench->add_option("--n", bench_n, "Walk length for rw-k (default 6)");
  bench->add_option("--count", bench_count, "Samples per list entry (default 100)");
  bench->add_option("--pool", bench_pool, "Series pool CSV for csv-sample");
  bench->add_option("--k", bench_k, "Subset size for csv-sample (default 2)");
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_option("--threads", bench_threads, "Worker threads (default 1)");
  bench->add_option("--algos", bench_algos, "Algorithms to run (default dba,bsg,ssg,mal)");
  bench->add_flag("--no-timing", bench_no_timing, "Write wall_ms as 0 for reproducible output");
  bench->add_flag("--summary", bench_summary, "Print per-algorithm stats to stderr");
  bench->add_option("-o,--output", bench_out, "Output CSV file (default stdout)");

  // profile
  std::string prof_file, prof_taus, prof_out;
  auto* prof = app.add_subcommand("profile", "Performance profiles from a bench CSV");
  prof->add_option("file", prof_file, "Bench CSV")->required();
  prof->add_option("--taus", prof_taus, "Comma-separated thresholds (default: observed errors)");
  prof->add_option("-o,--output", prof_out, "Output CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << "error: invalid-argument: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*dist) {
      Sample s = load_sample(dist_file);
      if (s.size() != 2) throw std::invalid_argument("dist expects exactly two series");
      DtwResult r = dtw_sq(s.series[0], s.series[1]);
      std::cout << "sq_distance " << format_double(r.sq_distance) << '\n';
      std::cout << "path " << format_path(r.path) << '\n';
    } else if (*mean) {
      if (!mean_weights.empty()) mean_args.weights = mean_weights;
      return run_mean(mean_args);
    } else if (*bin) {
      std::optional<std::string> w;
      if (!bin_weights.empty()) w = bin_weights;
      Sample s = load_sample(bin_file, w);
      print_mean(binary_mean(s), false);
    } else if (*heur) {
      std::optional<std::string> w;
      if (!heur_weights.empty()) w = heur_weights;
      Sample s = load_sample(heur_file, w);
      HeuristicConfig cfg;
      cfg.init = parse_init(heur_init);
      cfg.epochs = heur_epochs;
      cfg.step0 = heur_step0;
      cfg.tol = heur_tol;
      cfg.seed = heur_seed;
      MeanResult r;
      if (heur_algo == "mal") {
        if (s.size() != 2) throw std::invalid_argument("mal expects exactly two series");
        r = mal_mean(s.series[0], s.series[1]);
      } else if (heur_algo == "dba") {
        r = dba(s, cfg);
      } else if (heur_algo == "ssg") {
        r = ssg(s, cfg);
      } else if (heur_algo == "bsg") {
        r = bsg(s, cfg);
      } else if (heur_algo == "psa") {
        r = psa_exact(s);
      } else {
        throw std::invalid_argument("unknown heuristic '" + heur_algo + "'");
      }
      print_mean(r, false);
    } else if (*bench) {
      BenchOptions opts;
      if (bench_scheme == "rw-pairs") {
        opts.spec.scheme = ExperimentSpec::Scheme::kRwPairs;
        opts.spec.n_list = parse_size_list(bench_nlist);
      } else if (bench_scheme == "rw-k") {
        opts.spec.scheme = ExperimentSpec::Scheme::kRwK;
        opts.spec.k_list = parse_size_list(bench_klist);
        opts.spec.walk_length = bench_n;
      } else if (bench_scheme == "csv-sample") {
        opts.spec.scheme = ExperimentSpec::Scheme::kCsvSample;
        if (bench_pool.empty()) throw std::invalid_argument("csv-sample needs --pool");
        opts.spec.csv_path = bench_pool;
        opts.spec.subset_size = bench_k;
      } else {
        throw std::invalid_argument("unknown scheme '" + bench_scheme + "'");
      }
      opts.spec.count = bench_count;
      opts.spec.seed = bench_seed;
      opts.threads = bench_threads;
      opts.timing = !bench_no_timing;
      opts.algos.clear();
      std::stringstream ss(bench_algos);
      std::string tok;
      while (std::getline(ss, tok, ',')) opts.algos.push_back(tok);

      std::vector<RunRecord> rows = run_bench(opts);
      if (bench_out.empty()) {
        write_bench_csv(std::cout, rows);
      } else {
        std::ofstream out(bench_out);
        if (!out) throw std::invalid_argument("cannot open output file: " + bench_out);
        write_bench_csv(out, rows);
      }
      if (bench_summary) {
        for (const auto& [algo, st] : summarize(rows)) {
          std::cerr << algo << " avg " << format_double(st.avg) << " std "
                    << format_double(st.std_dev) << " max " << format_double(st.max) << " eq "
                    << st.exact_count << '\n';
        }
      }
    } else if (*prof) {
      std::ifstream in(prof_file);
      if (!in) throw std::invalid_argument("cannot open input file: " + prof_file);
      std::vector<RunRecord> rows = read_bench_csv(in);
      if (rows.empty()) throw std::invalid_argument("bench csv contains no records");

      std::map<std::string, std::vector<double>> by_algo;
      for (const RunRecord& r : rows) by_algo[r.algo].push_back(r.error_pct);

      std::vector<double> taus;
      if (!prof_taus.empty()) {
        std::stringstream ss(prof_taus);
        std::string tok;
        while (std::getline(ss, tok, ',')) taus.push_back(std::stod(tok));
        std::sort(taus.begin(), taus.end());
      } else {
        std::set<double> uniq;
        for (const RunRecord& r : rows) uniq.insert(r.error_pct);
        taus.assign(uniq.begin(), uniq.end());
      }

      std::ostream* os = &std::cout;
      std::ofstream out;
      if (!prof_out.empty()) {
        out.open(prof_out);
        if (!out) throw std::invalid_argument("cannot open output file: " + prof_out);
        os = &out;
      }
      *os << "algo,tau,probability\n";
      for (const auto& [algo, errors] : by_algo) {
        for (const auto& [tau, p] : performance_profile(errors, taus)) {
          *os << algo << ',' << format_double(tau) << ',' << format_double(p) << '\n';
        }
      }
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: resource: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid-argument: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: io: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
