#pragma once

// Table assembly and formatting shared by the CLI: compact
// mantissa(exponent) notation for human-readable tables ("3.116097(-2)"
// means 3.116097e-2), fixed %.15e cells for CSV, and a CSV parser used to
// verify that emitted tables round-trip.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricomi::render {

// value as mantissa(exponent), `digits` significant digits in the mantissa.
inline std::string format_compact(double value, int digits) {
  if (digits < 3 || digits > 15)
    throw std::domain_error("format_compact: digits must be in 3..15");
  if (value == 0.0) return "0";
  if (!std::isfinite(value)) return value > 0 ? "inf" : (value < 0 ? "-inf" : "nan");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, value);
  // split "m.mmmmme-02" into mantissa and exponent
  const std::string s(buf);
  const auto epos = s.find('e');
  const std::string mant = s.substr(0, epos);
  const int expo = std::stoi(s.substr(epos + 1));
  if (expo == 0) return mant;
  return mant + "(" + std::to_string(expo) + ")";
}

inline std::string format_csv(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", value);
  return buf;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string render_markdown(const Table& t) {
  // column widths from header and body
  std::vector<std::size_t> w(t.header.size(), 0);
  for (std::size_t j = 0; j < t.header.size(); ++j) w[j] = t.header[j].size();
  for (const auto& row : t.rows)
    for (std::size_t j = 0; j < row.size() && j < w.size(); ++j)
      w[j] = std::max(w[j], row[j].size());
  std::ostringstream out;
  auto emit_row = [&](const std::vector<std::string>& cells) {
    out << '|';
    for (std::size_t j = 0; j < w.size(); ++j) {
      const std::string& c = j < cells.size() ? cells[j] : std::string();
      out << ' ' << c << std::string(w[j] - c.size(), ' ') << " |";
    }
    out << '\n';
  };
  emit_row(t.header);
  out << '|';
  for (std::size_t j = 0; j < w.size(); ++j)
    out << std::string(w[j] + 2, '-') << '|';
  out << '\n';
  for (const auto& row : t.rows) emit_row(row);
  return out.str();
}

inline std::string render_csv(const Table& t) {
  std::ostringstream out;
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j) out << ',';
      out << cells[j];
    }
    out << '\n';
  };
  emit_row(t.header);
  for (const auto& row : t.rows) emit_row(row);
  return out.str();
}

// Parse CSV emitted by render_csv (no quoting/escapes: cells never contain
// commas or newlines).
inline Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

}  // namespace tricomi::render
