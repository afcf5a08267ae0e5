// SPDX-License-Identifier: Apache-2.0
//
// CSV plumbing: round-trip double formatting, a schema header comment, and
// a small reader for tabulated inputs.

#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace absum::csv {

inline constexpr const char* kSchemaHeader = "# absum-csv v1";

/// Shortest representation that round-trips to the same double.
inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) {
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
  }
  return std::string(buf, ptr);
}

/// Splits one CSV line on commas (no quoting; numeric tables only).
inline std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

/// Reads a numeric CSV file, skipping blank lines and '#' comments.
inline std::vector<std::vector<double>> read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CSV file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    for (const std::string& field : split_line(line)) {
      try {
        row.push_back(std::stod(field));
      } catch (const std::exception&) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": not a number: '" + field + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace absum::csv
