#include "pavek/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pavek {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return int(i);
  return -1;
}

double CsvTable::number(std::size_t row, int col) const {
  const std::string& s = cell(row, col);
  if (s.empty()) throw std::runtime_error("csv: empty numeric cell in row " + std::to_string(row));
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("csv: malformed number '" + s + "' in row " + std::to_string(row));
  }
}

const std::string& CsvTable::cell(std::size_t row, int col) const {
  if (col < 0 || row >= rows.size() || std::size_t(col) >= rows[row].size())
    throw std::runtime_error("csv: missing cell (row " + std::to_string(row) + ", col " +
                             std::to_string(col) + ")");
  return rows[row][std::size_t(col)];
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open " + path);
  CsvTable t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string c = line.substr(1);
      if (!c.empty() && c[0] == ' ') c.erase(0, 1);
      t.comments.push_back(c);
      continue;
    }
    if (!have_header) {
      t.header = split_fields(line);
      have_header = true;
    } else {
      auto fields = split_fields(line);
      if (fields.size() != t.header.size())
        throw std::runtime_error("csv: row with " + std::to_string(fields.size()) +
                                 " fields, expected " + std::to_string(t.header.size()) + " in " +
                                 path);
      t.rows.push_back(std::move(fields));
    }
  }
  if (!have_header) throw std::runtime_error("csv: no header row in " + path);
  return t;
}

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace pavek
