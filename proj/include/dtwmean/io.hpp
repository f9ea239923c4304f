#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "dtwmean/exact_mean.hpp"

namespace dtwmean {

/// One series per line, comma-separated decimal values. Unit weights.
Sample read_sample_csv(std::istream& is);

/// {"series": [[...], ...], "weights": [...]}; weights default to 1.
Sample read_sample_json(std::istream& is);

/// Loads a sample file; a .json suffix selects the JSON form, anything else
/// is read as CSV. weights_csv ("w1,w2,...") overrides the weights.
Sample load_sample(const std::string& path,
                   const std::optional<std::string>& weights_csv = std::nullopt);

/// Formats with 12 significant digits.
std::string format_double(double v);

/// "(1,1) (2,1) ...".
std::string format_path(const WarpingPath& p);

/// Alignment trace rows (mean_index, series_index, series_position), 1-based,
/// from the per-series paths of a mean result.
void write_alignment_csv(std::ostream& os, const MeanResult& result);

}  // namespace dtwmean
