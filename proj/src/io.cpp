#include "dtwmean/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace dtwmean {

namespace {

std::string_view trim(std::string_view sv) {
  while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' || sv.front() == '\r'))
    sv.remove_prefix(1);
  while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r'))
    sv.remove_suffix(1);
  return sv;
}

double parse_value(std::string_view tok, std::size_t lineno) {
  tok = trim(tok);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": bad number '" +
                                std::string(tok) + "'");
  }
  return v;
}

std::vector<double> parse_csv_line(const std::string& line, std::size_t lineno) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t comma = line.find(',', start);
    std::size_t end = comma == std::string::npos ? line.size() : comma;
    values.push_back(parse_value(std::string_view(line).substr(start, end - start), lineno));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

}  // namespace

Sample read_sample_csv(std::istream& is) {
  Sample s;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    s.series.push_back(parse_csv_line(line, lineno));
  }
  s.weights.assign(s.series.size(), 1.0);
  require_sample(s);
  return s;
}

Sample read_sample_json(std::istream& is) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json parse failure: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("series") || !doc["series"].is_array())
    throw std::invalid_argument("json input needs a 'series' array");
  Sample s;
  for (const auto& row : doc["series"]) {
    if (!row.is_array()) throw std::invalid_argument("json 'series' must be an array of arrays");
    TimeSeries x;
    for (const auto& v : row) {
      if (!v.is_number()) throw std::invalid_argument("json series values must be numbers");
      x.push_back(v.get<double>());
    }
    s.series.push_back(std::move(x));
  }
  if (doc.contains("weights")) {
    if (!doc["weights"].is_array())
      throw std::invalid_argument("json 'weights' must be an array");
    for (const auto& v : doc["weights"]) {
      if (!v.is_number()) throw std::invalid_argument("json weights must be numbers");
      s.weights.push_back(v.get<double>());
    }
  } else {
    s.weights.assign(s.series.size(), 1.0);
  }
  require_sample(s);
  return s;
}

Sample load_sample(const std::string& path, const std::optional<std::string>& weights_csv) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  Sample s = json ? read_sample_json(in) : read_sample_csv(in);
  if (weights_csv) {
    s.weights = parse_csv_line(*weights_csv, 1);
    require_sample(s);
  }
  return s;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_path(const WarpingPath& p) {
  std::string out;
  for (std::size_t l = 0; l < p.pairs.size(); ++l) {
    if (l > 0) out += ' ';
    out += '(' + std::to_string(p.pairs[l].i) + ',' + std::to_string(p.pairs[l].j) + ')';
  }
  return out;
}

void write_alignment_csv(std::ostream& os, const MeanResult& result) {
  if (!result.paths) throw std::invalid_argument("mean result carries no alignment paths");
  os << "mean_index,series_index,series_position\n";
  for (std::size_t j = 0; j < result.paths->size(); ++j) {
    for (const auto& [i, t] : (*result.paths)[j].pairs) {
      os << i << ',' << j + 1 << ',' << t << '\n';
    }
  }
}

}  // namespace dtwmean
