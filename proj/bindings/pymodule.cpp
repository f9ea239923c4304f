#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dtwmean/binary_mean.hpp"
#include "dtwmean/dtw.hpp"
#include "dtwmean/experiments.hpp"
#include "dtwmean/heuristics.hpp"
#include "dtwmean/rng.hpp"

namespace py = pybind11;
using namespace dtwmean;

namespace {

using PyPath = std::vector<std::pair<std::size_t, std::size_t>>;

PyPath to_py(const WarpingPath& p) {
  PyPath out;
  out.reserve(p.pairs.size());
  for (const auto& [i, j] : p.pairs) out.emplace_back(i, j);
  return out;
}

WarpingPath from_py(const PyPath& pairs, std::size_t m, std::size_t n) {
  WarpingPath p;
  p.m = m;
  p.n = n;
  for (const auto& [i, j] : pairs) p.pairs.push_back({i, j});
  return p;
}

Sample make_sample(const std::vector<TimeSeries>& series,
                   const std::optional<std::vector<double>>& weights) {
  Sample s;
  s.series = series;
  s.weights = weights ? *weights : std::vector<double>(series.size(), 1.0);
  return s;
}

HeuristicConfig make_config(const std::string& init, std::size_t epochs, double step0, double tol,
                            std::uint64_t seed) {
  HeuristicConfig cfg;
  if (init == "arith") {
    cfg.init = InitMethod::kArithmeticMean;
  } else if (init == "member") {
    cfg.init = InitMethod::kRandomMember;
  } else if (init == "normal") {
    cfg.init = InitMethod::kRandomNormal;
  } else {
    throw std::invalid_argument("init must be one of 'arith', 'member', 'normal'");
  }
  cfg.epochs = epochs;
  cfg.step0 = step0;
  cfg.tol = tol;
  cfg.seed = seed;
  return cfg;
}

py::object mean_result_to_py(const MeanResult& r) {
  py::dict d;
  d["mean"] = r.mean;
  d["frechet"] = r.frechet;
  if (r.paths) {
    py::list paths;
    for (const auto& p : *r.paths) paths.append(to_py(p));
    d["paths"] = paths;
  } else {
    d["paths"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_dtwmean, m) {
  m.doc() = "Exact and heuristic means of time series under dynamic time warping";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("condense", &condense, py::arg("x"));
  m.def("is_condensed", &is_condensed, py::arg("x"));
  m.def(
      "validate_path",
      [](const PyPath& path, std::size_t m_, std::size_t n_) {
        return validate_path(from_py(path, m_, n_), m_, n_);
      },
      py::arg("path"), py::arg("m"), py::arg("n"));
  m.def(
      "path_cost",
      [](const PyPath& path, const TimeSeries& x, const TimeSeries& y) {
        return path_cost(from_py(path, x.size(), y.size()), x, y);
      },
      py::arg("path"), py::arg("x"), py::arg("y"));

  m.def(
      "dtw_sq",
      [](const TimeSeries& x, const TimeSeries& y) {
        DtwResult r = dtw_sq(x, y);
        return py::make_tuple(r.sq_distance, to_py(r.path));
      },
      py::arg("x"), py::arg("y"), "Returns (sq_distance, path).");
  m.def(
      "enumerate_paths",
      [](std::size_t m_, std::size_t n_) {
        std::vector<PyPath> out;
        for_each_path(m_, n_, [&](const WarpingPath& p) { out.push_back(to_py(p)); });
        return out;
      },
      py::arg("m"), py::arg("n"));
  m.def("dtw_sq_brute", &dtw_sq_brute, py::arg("x"), py::arg("y"));

  m.def(
      "frechet_value",
      [](const TimeSeries& z, const std::vector<TimeSeries>& series,
         const std::optional<std::vector<double>>& weights) {
        return frechet_value(z, make_sample(series, weights));
      },
      py::arg("z"), py::arg("series"), py::arg("weights") = py::none());
  m.def(
      "edp_mean",
      [](const std::vector<TimeSeries>& series, const std::optional<std::vector<double>>& weights) {
        return mean_result_to_py(edp_mean(make_sample(series, weights)));
      },
      py::arg("series"), py::arg("weights") = py::none(),
      "Exact mean; returns {'mean', 'frechet', 'paths'}.");
  m.def(
      "edp_mean_constrained",
      [](const std::vector<TimeSeries>& series, std::size_t q,
         const std::optional<std::vector<double>>& weights) {
        return mean_result_to_py(edp_mean_constrained(make_sample(series, weights), q));
      },
      py::arg("series"), py::arg("q"), py::arg("weights") = py::none());
  m.def(
      "edp_all_means",
      [](const std::vector<TimeSeries>& series, const std::optional<std::vector<double>>& weights) {
        py::list out;
        for (const MeanResult& r : edp_all_means(make_sample(series, weights)))
          out.append(mean_result_to_py(r));
        return out;
      },
      py::arg("series"), py::arg("weights") = py::none());
  m.def(
      "constrained_sweep",
      [](const std::vector<TimeSeries>& series, std::size_t q_max,
         const std::optional<std::vector<double>>& weights) {
        return edp_constrained_sweep(make_sample(series, weights), q_max);
      },
      py::arg("series"), py::arg("q_max"), py::arg("weights") = py::none(),
      "Constrained Frechet variation F*_q for q = 1..q_max.");
  m.def(
      "mean_brute",
      [](const std::vector<TimeSeries>& series, std::size_t max_len,
         const std::optional<std::vector<double>>& weights) {
        return mean_result_to_py(mean_brute(make_sample(series, weights), max_len));
      },
      py::arg("series"), py::arg("max_len"), py::arg("weights") = py::none());

  m.def("binary_condensed_dtw_sq", &binary_condensed_dtw_sq, py::arg("x"), py::arg("y"));
  m.def("binary_dtw_sq", &binary_dtw_sq, py::arg("x"), py::arg("y"));
  m.def(
      "binary_mean",
      [](const std::vector<TimeSeries>& series, const std::optional<std::vector<double>>& weights) {
        return mean_result_to_py(binary_mean(make_sample(series, weights)));
      },
      py::arg("series"), py::arg("weights") = py::none());

  m.def(
      "mal_mean",
      [](const TimeSeries& x, const TimeSeries& y) { return mean_result_to_py(mal_mean(x, y)); },
      py::arg("x"), py::arg("y"));
  m.def(
      "dba",
      [](const std::vector<TimeSeries>& series, const std::optional<std::vector<double>>& weights,
         const std::string& init, std::size_t epochs, double step0, double tol,
         std::uint64_t seed) {
        return mean_result_to_py(
            dba(make_sample(series, weights), make_config(init, epochs, step0, tol, seed)));
      },
      py::arg("series"), py::arg("weights") = py::none(), py::arg("init") = "arith",
      py::arg("epochs") = 200, py::arg("step0") = 0.1, py::arg("tol") = 1e-6, py::arg("seed") = 0);
  m.def(
      "ssg",
      [](const std::vector<TimeSeries>& series, const std::optional<std::vector<double>>& weights,
         const std::string& init, std::size_t epochs, double step0, double tol,
         std::uint64_t seed) {
        return mean_result_to_py(
            ssg(make_sample(series, weights), make_config(init, epochs, step0, tol, seed)));
      },
      py::arg("series"), py::arg("weights") = py::none(), py::arg("init") = "arith",
      py::arg("epochs") = 200, py::arg("step0") = 0.1, py::arg("tol") = 1e-6, py::arg("seed") = 0);
  m.def(
      "bsg",
      [](const std::vector<TimeSeries>& series, const std::optional<std::vector<double>>& weights,
         const std::string& init, std::size_t epochs, double step0, double tol,
         std::uint64_t seed) {
        return mean_result_to_py(
            bsg(make_sample(series, weights), make_config(init, epochs, step0, tol, seed)));
      },
      py::arg("series"), py::arg("weights") = py::none(), py::arg("init") = "arith",
      py::arg("epochs") = 200, py::arg("step0") = 0.1, py::arg("tol") = 1e-6, py::arg("seed") = 0);
  m.def(
      "psa_exact",
      [](const std::vector<TimeSeries>& series, const std::optional<std::vector<double>>& weights) {
        return mean_result_to_py(psa_exact(make_sample(series, weights)));
      },
      py::arg("series"), py::arg("weights") = py::none());

  m.def(
      "random_walk",
      [](std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        return random_walk(n, rng);
      },
      py::arg("n"), py::arg("seed") = 0);
  m.def("error_percentage", &error_percentage, py::arg("f_algo"), py::arg("f_star"));
  m.def("length_deviation", &length_deviation, py::arg("mean_len_avg"), py::arg("n"));
  m.def(
      "performance_profile",
      [](const std::vector<double>& errors, const std::vector<double>& taus) {
        return performance_profile(errors, taus);
      },
      py::arg("errors"), py::arg("taus"));
}
