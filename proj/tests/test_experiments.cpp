#include <cmath>
#include <cstdlib>
#include <doctest.h>
#include <fstream>
#include <sstream>

#include "dtwmean/experiments.hpp"
#include "test_helpers.hpp"

using namespace dtwmean;

TEST_SUITE("experiments") {
  TEST_CASE("random walk basics") {
    Rng rng(1);
    CHECK(random_walk(1, rng).size() == 1);

    Rng a(42);
    Rng b(42);
    CHECK(random_walk(10, a) == random_walk(10, b));
    CHECK_THROWS_AS(random_walk(0, rng), std::invalid_argument);
  }

  TEST_CASE("random walk increments are standard normal") {
    Rng master(7);
    double sum = 0.0;
    double sumsq = 0.0;
    const int trials = 10000;
    for (int it = 0; it < trials; ++it) {
      Rng stream = master.split(it);
      TimeSeries w = random_walk(2, stream);
      double inc = w[1] - w[0];
      sum += inc;
      sumsq += inc * inc;
    }
    double mean = sum / trials;
    double var = sumsq / trials - mean * mean;
    CHECK(std::abs(mean) < 0.05);
    CHECK(std::abs(var - 1.0) < 0.1);
  }

  TEST_CASE("error percentage") {
    CHECK(error_percentage(7.0, 6.5) == doctest::Approx(100.0 * 0.5 / 6.5));
    CHECK(error_percentage(3.25, 3.25) == doctest::Approx(0.0));
    CHECK(error_percentage(13.0, 10.0) == doctest::Approx(30.0));
    CHECK_THROWS_AS(error_percentage(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(error_percentage(1.0, -2.0), std::invalid_argument);
  }

  TEST_CASE("length deviation") {
    CHECK(length_deviation(24.0, 24) == doctest::Approx(0.0));
    CHECK(length_deviation(32.0, 40) == doctest::Approx(-20.0));
    CHECK(length_deviation(5.0, 4) == doctest::Approx(25.0));
  }

  TEST_CASE("performance profile") {
    std::vector<double> zeros{0.0, 0.0};
    std::vector<double> tau0{0.0};
    CHECK(performance_profile(zeros, tau0).front().second == doctest::Approx(1.0));

    std::vector<double> two{10.0, 30.0};
    std::vector<double> tau20{20.0};
    CHECK(performance_profile(two, tau20).front().second == doctest::Approx(0.5));

    std::vector<double> fives{5.0, 5.0, 5.0};
    std::vector<double> tau49{4.9};
    CHECK(performance_profile(fives, tau49).front().second == doctest::Approx(0.0));

    CHECK_THROWS_AS(performance_profile(std::vector<double>{}, tau0), std::invalid_argument);
  }

  TEST_CASE("performance profile is a cdf") {
    Rng rng(5);
    std::vector<double> errors;
    for (int i = 0; i < 50; ++i) errors.push_back(100.0 * rng.next_unit());
    std::vector<double> taus;
    for (int t = 0; t <= 20; ++t) taus.push_back(5.0 * t);
    auto prof = performance_profile(errors, taus);
    double prev = 0.0;
    for (const auto& [tau, p] : prof) {
      CHECK(p >= prev - 1e-12);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      prev = p;
    }
    CHECK(prof.back().second == doctest::Approx(1.0));
  }

  TEST_CASE("error decomposition on the published pair") {
    Sample ex1 = Sample::with_unit_weights({{1, 4, 2, 3}, {4, 2, 4, 5}});
    MeanResult opt = edp_mean(ex1);

    ErrorDecomposition d = error_decomposition(ex1, opt.frechet, opt.mean.size());
    CHECK(d.approx == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(d.structural == doctest::Approx(0.0).epsilon(1e-9));

    d = error_decomposition(ex1, 7.0, 5);  // the MAL average has length 5
    CHECK(d.structural == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(d.approx == doctest::Approx(0.5).epsilon(1e-9));

    d = error_decomposition(ex1, 6.5, 4);
    CHECK(d.approx == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(d.structural == doctest::Approx(0.0).epsilon(1e-9));
  }

  TEST_CASE("decomposition components sum to the total error") {
    Rng rng(6);
    for (int it = 0; it < 10; ++it) {
      Sample s = dtwmean::testing::random_int_sample(rng, 2, 2, 5, 0, 4);
      double f_star = edp_mean(s).frechet;
      double f_a = f_star + rng.next_unit();
      std::size_t q = 1 + rng.next_below(5);
      ErrorDecomposition d = error_decomposition(s, f_a, q);
      CHECK(d.approx + d.structural == doctest::Approx(f_a - f_star).epsilon(1e-9));
      CHECK(d.structural >= -1e-9);
    }
  }

  TEST_CASE("constrained variation sweep") {
    Sample singleton = Sample::with_unit_weights({{1, 3}});
    auto sw = sweep_constrained_variation(singleton, 3);
    REQUIRE(sw.size() == 3);
    CHECK(sw[1].first == 2);
    CHECK(sw[1].second == doctest::Approx(0.0));

    Sample ex1 = Sample::with_unit_weights({{1, 4, 2, 3}, {4, 2, 4, 5}});
    auto sweep = sweep_constrained_variation(ex1, 8);
    double best = sweep.front().second;
    for (const auto& [q, f] : sweep) best = std::min(best, f);
    CHECK(best == doctest::Approx(6.5).epsilon(1e-9));
    CHECK(sweep[3].second == doctest::Approx(6.5).epsilon(1e-9));  // attained at q = 4

    Rng rng(8);
    Rng w0 = rng.split(0);
    Rng w1 = rng.split(1);
    Sample rw = Sample::with_unit_weights({random_walk(8, w0), random_walk(8, w1)});
    auto rws = sweep_constrained_variation(rw, 15);
    double m = rws.front().second;
    for (const auto& [q, f] : rws) m = std::min(m, f);
    CHECK(m == doctest::Approx(edp_mean(rw).frechet).epsilon(1e-9));
  }

  TEST_CASE("uniqueness statistics") {
    std::vector<Sample> constants;
    for (int i = 0; i < 4; ++i) {
      constants.push_back(Sample::with_unit_weights({{double(i)}, {double(i)}}));
    }
    UniquenessStats st = uniqueness_stats(constants);
    CHECK(st.pct_unique == doctest::Approx(100.0));
    CHECK(st.avg_count == doctest::Approx(1.0));
    CHECK(st.max_count == 1);

    std::vector<Sample> plateau;
    plateau.push_back(Sample::with_unit_weights({{0, 1, 1, 1, 5, 1, 1, 1, 5, 1, 1, 1, 5},
                                                 {0, 2, 2, 2, 5, 2, 2, 2, 5, 2, 2, 2, 5}}));
    st = uniqueness_stats(plateau);
    CHECK(st.max_count == 8);
    CHECK(st.pct_unique == doctest::Approx(0.0));

    std::vector<Sample> one;
    one.push_back(Sample::with_unit_weights({{1, 2, 3}, {1, 2, 3}}));
    st = uniqueness_stats(one);
    CHECK(st.pct_unique == doctest::Approx(100.0));
    CHECK(st.avg_count == doctest::Approx(1.0));
    CHECK(st.max_count == 1);
  }

  TEST_CASE("summaries") {
    auto record = [](const char* algo, double err) {
      RunRecord r;
      r.algo = algo;
      r.error_pct = err;
      return r;
    };
    std::vector<RunRecord> one{record("a", 0.0)};
    auto s = summarize(one);
    CHECK(s["a"].avg == doctest::Approx(0.0));
    CHECK(s["a"].std_dev == doctest::Approx(0.0));
    CHECK(s["a"].max == doctest::Approx(0.0));
    CHECK(s["a"].exact_count == 1);

    std::vector<RunRecord> two{record("a", 10.0), record("a", 30.0)};
    s = summarize(two);
    CHECK(s["a"].avg == doctest::Approx(20.0));
    CHECK(s["a"].std_dev == doctest::Approx(10.0));
    CHECK(s["a"].max == doctest::Approx(30.0));
    CHECK(s["a"].exact_count == 0);

    std::vector<RunRecord> three{record("a", 0.0), record("a", 0.0), record("a", 6.0)};
    s = summarize(three);
    CHECK(s["a"].avg == doctest::Approx(2.0));
    CHECK(s["a"].std_dev == doctest::Approx(std::sqrt(8.0)));
    CHECK(s["a"].max == doctest::Approx(6.0));
    CHECK(s["a"].exact_count == 2);

    CHECK_THROWS_AS(summarize(std::vector<RunRecord>{}), std::invalid_argument);
  }

  TEST_CASE("sample generation is reproducible and shaped as requested") {
    ExperimentSpec spec;
    spec.scheme = ExperimentSpec::Scheme::kRwPairs;
    spec.n_list = {4, 6};
    spec.count = 3;
    spec.seed = 77;
    auto a = generate_samples(spec);
    auto b = generate_samples(spec);
    REQUIRE(a.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].series == b[i].series);
      CHECK(a[i].size() == 2);
      CHECK(a[i].series[0].size() == (i < 3 ? 4 : 6));
    }

    ExperimentSpec rwk;
    rwk.scheme = ExperimentSpec::Scheme::kRwK;
    rwk.k_list = {2, 3};
    rwk.walk_length = 5;
    rwk.count = 2;
    auto c = generate_samples(rwk);
    REQUIRE(c.size() == 4);
    CHECK(c[0].size() == 2);
    CHECK(c[3].size() == 3);
    CHECK(c[3].series[0].size() == 5);
  }

  TEST_CASE("csv-sample scheme draws subsets from a pool") {
    REQUIRE(std::system("mkdir -p exp_tmp") == 0);
    {
      std::ofstream pool("exp_tmp/pool.csv");
      pool << "1,2,3\n4,5,6\n7,8,9\n1,1,1\n";
    }
    ExperimentSpec spec;
    spec.scheme = ExperimentSpec::Scheme::kCsvSample;
    spec.csv_path = "exp_tmp/pool.csv";
    spec.subset_size = 2;
    spec.count = 5;
    spec.seed = 3;
    auto a = generate_samples(spec);
    auto b = generate_samples(spec);
    REQUIRE(a.size() == 5);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].size() == 2);
      CHECK(a[i].series == b[i].series);
      CHECK(a[i].series[0] != a[i].series[1]);  // distinct pool members
    }
    spec.subset_size = 9;
    CHECK_THROWS_AS(generate_samples(spec), std::invalid_argument);
    spec.subset_size = 2;
    spec.csv_path = "exp_tmp/missing.csv";
    CHECK_THROWS_AS(generate_samples(spec), std::invalid_argument);
  }

  TEST_CASE("bench runs, sorts, decomposes and reproduces") {
    BenchOptions opts;
    opts.spec.scheme = ExperimentSpec::Scheme::kRwPairs;
    opts.spec.n_list = {5};
    opts.spec.count = 3;
    opts.spec.seed = 13;
    opts.algos = {"dba", "mal"};
    opts.timing = false;

    auto rows = run_bench(opts);
    REQUIRE(rows.size() == 9);  // 3 samples x (edp + dba + mal)
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      CHECK((rows[i].sample_id < rows[i + 1].sample_id ||
             (rows[i].sample_id == rows[i + 1].sample_id && rows[i].algo <= rows[i + 1].algo)));
    }
    for (const RunRecord& r : rows) {
      CHECK(r.error_pct >= -1e-7);
      CHECK(r.approx_err + r.struct_err ==
            doctest::Approx(r.f_algo - r.f_star).epsilon(1e-9));
      CHECK(r.struct_err >= -1e-9);
      CHECK(r.wall_ms == 0.0);
      if (r.algo == "edp") CHECK(r.error_pct == doctest::Approx(0.0));
    }

    std::ostringstream csv1, csv2;
    write_bench_csv(csv1, rows);
    write_bench_csv(csv2, run_bench(opts));
    CHECK(csv1.str() == csv2.str());  // byte-identical under a fixed seed

    std::istringstream back(csv1.str());
    auto parsed = read_bench_csv(back);
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(parsed[i].algo == rows[i].algo);
      CHECK(parsed[i].f_algo == doctest::Approx(rows[i].f_algo).epsilon(1e-9));
    }

    BenchOptions threaded = opts;
    threaded.threads = 3;
    std::ostringstream csv3;
    write_bench_csv(csv3, run_bench(threaded));
    CHECK(csv3.str() == csv1.str());  // thread count does not change the rows

    BenchOptions bad = opts;
    bad.algos = {"nope"};
    CHECK_THROWS_AS(run_bench(bad), std::invalid_argument);
  }
}
