#include <doctest.h>

#include "dtwmean/dtw.hpp"
#include "dtwmean/experiments.hpp"
#include "dtwmean/heuristics.hpp"
#include "test_helpers.hpp"

using namespace dtwmean;
using dtwmean::testing::random_int_sample;

namespace {

const Sample kExample1 = Sample::with_unit_weights({{1, 4, 2, 3}, {4, 2, 4, 5}});

Sample random_walk_pair(std::uint64_t seed, std::size_t n) {
  Rng stream(seed);
  Rng r0 = stream.split(0);
  Rng r1 = stream.split(1);
  return Sample::with_unit_weights({random_walk(n, r0), random_walk(n, r1)});
}

}  // namespace

TEST_SUITE("heuristics") {
  TEST_CASE("mal on the published pair") {
    MeanResult r = mal_mean({1, 4, 2, 3}, {4, 2, 4, 5});
    REQUIRE(r.mean.size() == 5);
    TimeSeries expected{2.5, 4, 2, 3.5, 4};
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(r.mean[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
    CHECK(r.frechet == doctest::Approx(7.0).epsilon(1e-10));
  }

  TEST_CASE("mal trivial cases and length bounds") {
    MeanResult same = mal_mean({2.5}, {2.5});
    CHECK(same.mean == TimeSeries{2.5});
    CHECK(same.frechet == doctest::Approx(0.0));

    MeanResult two = mal_mean({0}, {2});
    CHECK(two.mean == TimeSeries{1});
    CHECK(two.frechet == doctest::Approx(2.0));

    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
      Sample s = random_int_sample(rng, 2, 1, 8, 0, 4);
      MeanResult r = mal_mean(s.series[0], s.series[1]);
      std::size_t m = s.series[0].size();
      std::size_t n = s.series[1].size();
      CHECK(r.mean.size() >= std::max(m, n));
      CHECK(r.mean.size() <= m + n);
    }
  }

  TEST_CASE("initial_mean variants") {
    HeuristicConfig cfg;
    cfg.init = InitMethod::kArithmeticMean;
    TimeSeries arith = initial_mean(kExample1, cfg);
    CHECK(arith == TimeSeries{2.5, 3, 3, 4});

    Sample unequal = Sample::with_unit_weights({{1, 2}, {3}});
    CHECK_THROWS_AS(initial_mean(unequal, cfg), std::invalid_argument);

    cfg.init = InitMethod::kRandomMember;
    TimeSeries member = initial_mean(kExample1, cfg);
    CHECK((member == kExample1.series[0] || member == kExample1.series[1]));

    cfg.init = InitMethod::kRandomNormal;
    cfg.seed = 5;
    TimeSeries normal = initial_mean(kExample1, cfg);
    CHECK(normal.size() == 4);
    CHECK(normal == initial_mean(kExample1, cfg));  // same seed, same draw
    cfg.seed = 6;
    CHECK(normal != initial_mean(kExample1, cfg));

    cfg.init_series = TimeSeries{9, 9};
    CHECK(initial_mean(kExample1, cfg) == TimeSeries{9, 9});
  }

  TEST_CASE("dba descends from the multiple-alignment average") {
    MeanResult mal = mal_mean(kExample1.series[0], kExample1.series[1]);
    HeuristicConfig cfg;
    cfg.init_series = mal.mean;
    std::vector<double> trace;
    MeanResult r = dba(kExample1, cfg, &trace);
    REQUIRE(!trace.empty());
    CHECK(trace.front() == doctest::Approx(7.0).epsilon(1e-10));
    CHECK(r.frechet <= 7.0 + 1e-9);
    CHECK(r.frechet >= 6.5 - 1e-9);
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) CHECK(trace[i + 1] <= trace[i] + 1e-9);
  }

  TEST_CASE("dba from a sample member starts at its frechet value") {
    HeuristicConfig cfg;
    cfg.init_series = kExample1.series[0];
    std::vector<double> trace;
    MeanResult r = dba(kExample1, cfg, &trace);
    CHECK(trace.front() == doctest::Approx(14.0).epsilon(1e-10));  // 0 + dtw^2 = 14
    CHECK(r.frechet <= 14.0 + 1e-9);
  }

  TEST_CASE("dba fixed point on constant samples") {
    Sample s = Sample::with_unit_weights({{4.5}, {4.5}});
    HeuristicConfig cfg;
    MeanResult r = dba(s, cfg);
    CHECK(r.mean == TimeSeries{4.5});
    CHECK(r.frechet == doctest::Approx(0.0));
  }

  TEST_CASE("dba monotone descent on random walks") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Sample s = random_walk_pair(seed, 5 + seed % 12);
      for (InitMethod init :
           {InitMethod::kArithmeticMean, InitMethod::kRandomMember, InitMethod::kRandomNormal}) {
        HeuristicConfig cfg;
        cfg.init = init;
        cfg.seed = seed;
        std::vector<double> trace;
        dba(s, cfg, &trace);
        for (std::size_t i = 0; i + 1 < trace.size(); ++i) CHECK(trace[i + 1] <= trace[i] + 1e-9);
      }
    }
  }

  TEST_CASE("subgradient step of size zero keeps the start") {
    HeuristicConfig cfg;
    cfg.step0 = 1e-300;  // far below the resolution of any update
    cfg.epochs = 5;
    TimeSeries init = initial_mean(kExample1, cfg);
    for (auto* fn : {&ssg, &bsg}) {
      MeanResult r = (*fn)(kExample1, cfg);
      CHECK(r.mean == init);
      CHECK(r.frechet == doctest::Approx(frechet_value(init, kExample1)).epsilon(1e-12));
    }
  }

  TEST_CASE("subgradient methods on constant samples") {
    Sample s = Sample::with_unit_weights({{1.5}, {1.5}});
    HeuristicConfig cfg;
    MeanResult r = ssg(s, cfg);
    CHECK(r.mean == TimeSeries{1.5});
    CHECK(r.frechet == doctest::Approx(0.0));
    r = bsg(s, cfg);
    CHECK(r.mean == TimeSeries{1.5});
    CHECK(r.frechet == doctest::Approx(0.0));

    Sample one = Sample::with_unit_weights({{2, 7, 2}});
    HeuristicConfig cfg_member;
    cfg_member.init = InitMethod::kRandomMember;
    CHECK(bsg(one, cfg_member).frechet == doctest::Approx(0.0));
  }

  TEST_CASE("best-of-grid subgradient runs land between optimum and start") {
    MeanResult mal = mal_mean(kExample1.series[0], kExample1.series[1]);
    for (auto* fn : {&ssg, &bsg}) {
      double best = std::numeric_limits<double>::infinity();
      for (double step0 : {0.25, 0.2, 0.15, 0.1}) {
        HeuristicConfig cfg;
        cfg.init_series = mal.mean;
        cfg.step0 = step0;
        cfg.seed = 1;
        best = std::min(best, (*fn)(kExample1, cfg).frechet);
      }
      CHECK(best <= 7.0 + 1e-9);
      CHECK(best >= 6.5 - 1e-9);
    }
  }

  TEST_CASE("identical configuration reproduces identical iterates") {
    Sample s = random_walk_pair(99, 10);
    HeuristicConfig cfg;
    cfg.init = InitMethod::kRandomNormal;
    cfg.seed = 1234;
    MeanResult a = ssg(s, cfg);
    MeanResult b = ssg(s, cfg);
    CHECK(a.mean == b.mean);  // bit-for-bit
    CHECK(a.frechet == b.frechet);
    MeanResult c = bsg(s, cfg);
    MeanResult d = bsg(s, cfg);
    CHECK(c.mean == d.mean);
  }

  TEST_CASE("analytic subgradient matches central differences") {
    Rng rng(4242);
    for (int it = 0; it < 50; ++it) {
      Sample s = random_int_sample(rng, 1 + rng.next_below(3), 2, 6, 0, 4);
      std::size_t m = 2 + rng.next_below(5);
      TimeSeries z(m);
      for (double& v : z) v = rng.next_normal();
      std::vector<WarpingPath> paths;
      for (const auto& x : s.series) paths.push_back(dtw_sq(z, x).path);

      std::vector<double> g = frechet_subgradient(z, s, paths);
      auto objective = [&](const TimeSeries& zz) {
        double f = 0.0;
        for (std::size_t j = 0; j < s.size(); ++j)
          f += s.weights[j] * path_cost(paths[j], zz, s.series[j]);
        return f;
      };
      const double h = 1e-6;
      for (std::size_t i = 0; i < m; ++i) {
        TimeSeries up = z;
        TimeSeries down = z;
        up[i] += h;
        down[i] -= h;
        double fd = (objective(up) - objective(down)) / (2 * h);
        CHECK(std::abs(g[i] - fd) <= 1e-5 * std::max(1.0, std::abs(g[i])));
      }
    }
  }

  TEST_CASE("frechet_subgradient validates its inputs") {
    CHECK_THROWS_AS(frechet_subgradient({1, 2}, kExample1, std::vector<WarpingPath>{}),
                    std::invalid_argument);
  }

  TEST_CASE("psa collapses constants and matches edp for two series") {
    MeanResult c = psa_exact(Sample::with_unit_weights({{3}, {3}, {3}}));
    CHECK(c.mean == TimeSeries{3});
    CHECK(c.frechet == doctest::Approx(0.0));

    MeanResult pair = psa_exact(kExample1);
    CHECK(pair.frechet == doctest::Approx(edp_mean(kExample1).frechet).epsilon(1e-9));

    Sample ex2 =
        Sample::with_unit_weights({{1, 10, 0, 0, 4}, {0, 2, 10, 0, 0}, {0, 0, 0, 10, 0}});
    CHECK(psa_exact(ex2).frechet >= edp_mean(ex2).frechet - 1e-9);

    CHECK_THROWS_AS(psa_exact(Sample::with_unit_weights({{1}})), std::invalid_argument);
  }

  TEST_CASE("no heuristic beats the exact optimum") {
    Rng rng(31);
    for (int it = 0; it < 10; ++it) {
      Sample s = random_int_sample(rng, 2, 2, 4, 0, 4);
      double f_star = edp_mean(s).frechet;
      HeuristicConfig cfg;
      cfg.init = InitMethod::kRandomNormal;
      cfg.seed = it;
      cfg.epochs = 50;
      CHECK(dba(s, cfg).frechet >= f_star - 1e-9);
      CHECK(ssg(s, cfg).frechet >= f_star - 1e-9);
      CHECK(bsg(s, cfg).frechet >= f_star - 1e-9);
      CHECK(mal_mean(s.series[0], s.series[1]).frechet >= f_star - 1e-9);
      CHECK(psa_exact(s).frechet >= f_star - 1e-9);
    }
  }
}
