#include <doctest.h>
#include <sstream>

#include "dtwmean/dtw.hpp"
#include "dtwmean/exact_mean.hpp"
#include "dtwmean/io.hpp"

using namespace dtwmean;

TEST_SUITE("io") {
  TEST_CASE("csv parsing") {
    std::istringstream in("1,4,2,3\n4, 2 ,4,5\n\n");
    Sample s = read_sample_csv(in);
    REQUIRE(s.size() == 2);
    CHECK(s.series[0] == TimeSeries{1, 4, 2, 3});
    CHECK(s.series[1] == TimeSeries{4, 2, 4, 5});
    CHECK(s.weights == std::vector<double>{1.0, 1.0});

    std::istringstream crlf("1,2\r\n3,4\r\n");
    CHECK(read_sample_csv(crlf).series[1] == TimeSeries{3, 4});

    std::istringstream bad("1,two,3\n");
    CHECK_THROWS_WITH_AS(Sample _ = read_sample_csv(bad), doctest::Contains("line 1"),
                         std::invalid_argument);

    std::istringstream empty("");
    CHECK_THROWS_AS(Sample _ = read_sample_csv(empty), std::invalid_argument);

    std::istringstream hole("1,,2\n");
    CHECK_THROWS_AS(Sample _ = read_sample_csv(hole), std::invalid_argument);
  }

  TEST_CASE("json parsing") {
    std::istringstream in(R"({"series": [[1,4,2,3],[4,2,4,5]], "weights": [2, 1]})");
    Sample s = read_sample_json(in);
    REQUIRE(s.size() == 2);
    CHECK(s.weights == std::vector<double>{2.0, 1.0});

    std::istringstream defaulted(R"({"series": [[0.5]]})");
    CHECK(read_sample_json(defaulted).weights == std::vector<double>{1.0});

    std::istringstream no_series(R"({"rows": []})");
    CHECK_THROWS_AS(Sample _ = read_sample_json(no_series), std::invalid_argument);
    std::istringstream not_json("nope{");
    CHECK_THROWS_AS(Sample _ = read_sample_json(not_json), std::invalid_argument);
    std::istringstream bad_weights(R"({"series": [[1]], "weights": [1, 2]})");
    CHECK_THROWS_AS(Sample _ = read_sample_json(bad_weights), std::invalid_argument);
  }

  TEST_CASE("number formatting uses 12 significant digits") {
    CHECK(format_double(6.5) == "6.5");
    CHECK(format_double(14.0) == "14");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(-0.25) == "-0.25");
  }

  TEST_CASE("path formatting") {
    WarpingPath p;
    p.pairs = {{1, 1}, {2, 1}, {2, 2}};
    p.m = 2;
    p.n = 2;
    CHECK(format_path(p) == "(1,1) (2,1) (2,2)");
  }

  TEST_CASE("alignment trace export") {
    Sample ex1 = Sample::with_unit_weights({{1, 4, 2, 3}, {4, 2, 4, 5}});
    MeanResult r = edp_mean(ex1);
    std::ostringstream out;
    write_alignment_csv(out, r);
    std::istringstream lines(out.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "mean_index,series_index,series_position");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty()) ++rows;
    }
    CHECK(rows == (*r.paths)[0].length() + (*r.paths)[1].length());

    MeanResult no_paths;
    no_paths.mean = {1};
    CHECK_THROWS_AS(write_alignment_csv(out, no_paths), std::invalid_argument);
  }
}
