#pragma once

#include <string>
#include <vector>

// Minimal CSV handling for the fixture and report formats: '#' comment lines,
// one header row, comma-separated fields without quoting. Doubles are
// formatted shortest-round-trip so emitted files are byte-stable.

namespace pavek {

struct CsvTable {
  std::vector<std::string> comments;  // leading '#' lines, markers stripped
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
  double number(std::size_t row, int col) const;
  const std::string& cell(std::size_t row, int col) const;
};

CsvTable read_csv(const std::string& path);

/// Shortest representation that round-trips through double.
std::string format_double(double v);

}  // namespace pavek
