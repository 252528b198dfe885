#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hga/applications.hpp"
#include "hga/means.hpp"

namespace hga::io {

/// Reads a whole file, or standard input when `path` is "-".
std::string read_input(const std::string& path);

/// Sample from JSON {"values": [...], "weights": [...]} or CSV with a header
/// row `value,weight` (or just `value`). Missing weights mean equal weights.
WeightedSample parse_sample(std::string_view text);

/// Matrix text: first line the order n, then n rows of n numbers. Entries that
/// differ from their transpose by at most kSymmetryTolerance (relative) are averaged.
SymmetricMatrix parse_matrix(std::string_view text);
inline constexpr double kSymmetryTolerance = 1e-8;

/// JSON array of numbers.
std::vector<double> parse_json_numbers(std::string_view text, const std::string& field);

/// Comma-separated numbers such as "0.25,0.25,0.5".
std::vector<double> parse_number_list(std::string_view text, const std::string& field);

}  // namespace hga::io
