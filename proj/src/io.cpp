#include "hga/io.hpp"

#include <algorithm>
#include <cerrno>
#include <limits>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "hga/errors.hpp"

namespace hga::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token, std::size_t line, const std::string& field) {
  const std::string_view t = trim(token);
  if (t.empty()) throw ParseError("empty number", line, field);
  const std::string buf(t);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ParseError("not a finite number: '" + buf + "'", line, field);
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::size_t line_of_byte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of_byte(text, e.byte), "");
  }
}

std::vector<double> json_numbers(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("expected an array of numbers", 0, field);
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ParseError("expected a number", 0, field + "[" + std::to_string(i) + "]");
    out.push_back(j[i].get<double>());
  }
  return out;
}

WeightedSample make_sample(std::vector<double> values, std::vector<double> weights) {
  if (weights.empty()) return WeightedSample::equal_weights(std::move(values));
  return WeightedSample(std::move(values), std::move(weights));
}

WeightedSample parse_sample_json(std::string_view text) {
  const nlohmann::json j = parse_json(text);
  if (!j.is_object()) throw ParseError("sample JSON must be an object", 1, "");
  if (!j.contains("values")) throw ParseError("missing field", 0, "values");
  std::vector<double> values = json_numbers(j.at("values"), "values");
  std::vector<double> weights;
  if (j.contains("weights")) weights = json_numbers(j.at("weights"), "weights");
  return make_sample(std::move(values), std::move(weights));
}

WeightedSample parse_sample_csv(std::string_view text) {
  std::vector<double> values;
  std::vector<double> weights;
  bool header_seen = false;
  bool has_weights = false;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (!header_seen) {
      header_seen = true;
      if (trim(cells[0]) != "value" || cells.size() > 2 || (cells.size() == 2 && trim(cells[1]) != "weight")) {
        throw ParseError("CSV header must be 'value,weight' or 'value'", line_no, "header");
      }
      has_weights = cells.size() == 2;
      continue;
    }
    if (cells.size() != (has_weights ? 2u : 1u)) {
      throw ParseError("wrong number of columns", line_no, has_weights ? "value,weight" : "value");
    }
    values.push_back(parse_number(cells[0], line_no, "value"));
    if (has_weights) weights.push_back(parse_number(cells[1], line_no, "weight"));
  }
  if (!header_seen) throw ParseError("empty sample input", 0, "");
  return make_sample(std::move(values), std::move(weights));
}

}  // namespace

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file '" + path + "'", 0, "");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WeightedSample parse_sample(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_sample_json(t);
  return parse_sample_csv(text);
}

SymmetricMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t order = 0;
  bool have_order = false;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::string_view> tokens;
    for (std::size_t pos = 0; pos < line.size();) {
      const auto start = line.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      const auto stop = line.find_first_of(" \t", start);
      tokens.push_back(line.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start));
      pos = stop == std::string_view::npos ? line.size() : stop;
    }
    if (!have_order) {
      if (tokens.size() != 1) throw ParseError("first line must hold the matrix order", line_no, "n");
      const double n = parse_number(tokens[0], line_no, "n");
      if (n < 1 || n != std::floor(n)) throw ParseError("matrix order must be a positive integer", line_no, "n");
      order = static_cast<std::size_t>(n);
      have_order = true;
      continue;
    }
    if (rows.size() == order) throw ParseError("more rows than the declared order", line_no, "row");
    if (tokens.size() != order) {
      throw ParseError("row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(order),
                       line_no, "row " + std::to_string(rows.size() + 1));
    }
    std::vector<double> row;
    for (std::size_t j = 0; j < order; ++j) {
      row.push_back(parse_number(tokens[j], line_no, "column " + std::to_string(j + 1)));
    }
    rows.push_back(std::move(row));
  }
  if (!have_order) throw ParseError("empty matrix input", 0, "n");
  if (rows.size() != order) {
    throw ParseError("expected " + std::to_string(order) + " rows, got " + std::to_string(rows.size()), line_no,
                     "row");
  }

  std::vector<double> entries(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      const double x = rows[i][j];
      const double y = rows[j][i];
      const double scale = std::max({std::abs(x), std::abs(y), std::numeric_limits<double>::min()});
      if (std::abs(x - y) > kSymmetryTolerance * scale) {
        throw ParseError("matrix is not symmetric at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")",
                         0, "entry");
      }
      entries[i * order + j] = 0.5 * (x + y);
    }
  }
  return SymmetricMatrix(order, std::move(entries));
}

std::vector<double> parse_json_numbers(std::string_view text, const std::string& field) {
  return json_numbers(parse_json(trim(text)), field);
}

std::vector<double> parse_number_list(std::string_view text, const std::string& field) {
  std::vector<double> out;
  std::size_t idx = 0;
  for (std::string_view tok : split(trim(text), ',')) {
    out.push_back(parse_number(tok, 0, field + "[" + std::to_string(idx++) + "]"));
  }
  return out;
}

}  // namespace hga::io
