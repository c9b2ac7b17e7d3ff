#pragma once

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "zrepel/interval.hpp"

namespace zrepel {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, table, csv };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "table") return OutputFormat::table;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format: " + s);
}

// Interval endpoints as outward-rounded decimal strings; the recorded digit
// count follows the working precision so JSON output is reproducible across
// formats and runs.
inline Json interval_json(const Interval& x, int digits = 0) {
  if (digits <= 0) digits = static_cast<int>(Precision::bits() * 0.3010) + 2;
  return Json{{"lo", x.lo_decimal(digits)}, {"hi", x.hi_decimal(digits)}};
}

namespace detail {

inline std::string scalar_to_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  return v.dump();
}

// flatten {"x": {"lo": .., "hi": ..}} into columns x.lo / x.hi; arrays join
inline void flatten(const Json& row, std::vector<std::pair<std::string, std::string>>& out) {
  for (auto& [key, value] : row.items()) {
    if (value.is_object()) {
      for (auto& [k2, v2] : value.items()) out.emplace_back(key + "." + k2, scalar_to_string(v2));
    } else if (value.is_array()) {
      std::string joined;
      for (auto& v2 : value) {
        if (!joined.empty()) joined += " ";
        joined += scalar_to_string(v2);
      }
      out.emplace_back(key, joined);
    } else {
      out.emplace_back(key, scalar_to_string(value));
    }
  }
}

inline std::string csv_quote(const std::string& s) {
  bool need = s.find_first_of(",\"\n\r") != std::string::npos;
  if (!need) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace detail

// rows: a JSON array of flat-ish objects (or a single object, treated as one
// row). JSON output is the array itself, stable key order.
inline void emit(const Json& rows_in, OutputFormat fmt, std::ostream& os) {
  Json rows = rows_in.is_array() ? rows_in : Json::array({rows_in});
  if (fmt == OutputFormat::json) {
    os << (rows_in.is_array() ? rows : rows_in).dump(2) << "\n";
    return;
  }
  // column order: first-seen across rows
  std::vector<std::string> cols;
  std::vector<std::vector<std::string>> cells;
  for (auto& row : rows) {
    std::vector<std::pair<std::string, std::string>> flat;
    detail::flatten(row, flat);
    std::vector<std::string> line(cols.size());
    for (auto& [k, v] : flat) {
      auto it = std::find(cols.begin(), cols.end(), k);
      size_t idx;
      if (it == cols.end()) {
        cols.push_back(k);
        idx = cols.size() - 1;
        for (auto& l : cells) l.resize(cols.size());
        line.resize(cols.size());
      } else {
        idx = static_cast<size_t>(it - cols.begin());
      }
      line[idx] = v;
    }
    line.resize(cols.size());
    cells.push_back(std::move(line));
  }
  if (fmt == OutputFormat::csv) {
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << detail::csv_quote(cols[i]);
    os << "\r\n";
    for (auto& line : cells) {
      for (size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << detail::csv_quote(i < line.size() ? line[i] : "");
      os << "\r\n";
    }
    return;
  }
  // aligned table
  std::vector<size_t> widths(cols.size());
  for (size_t i = 0; i < cols.size(); ++i) widths[i] = cols[i].size();
  for (auto& line : cells)
    for (size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());
  auto pad = [&](const std::string& s, size_t w) {
    std::string out = s;
    out.resize(w, ' ');
    return out;
  };
  for (size_t i = 0; i < cols.size(); ++i) os << (i ? "  " : "") << pad(cols[i], widths[i]);
  os << "\n";
  for (size_t i = 0; i < cols.size(); ++i)
    os << (i ? "  " : "") << std::string(widths[i], '-');
  os << "\n";
  for (auto& line : cells) {
    for (size_t i = 0; i < cols.size(); ++i)
      os << (i ? "  " : "") << pad(i < line.size() ? line[i] : "", widths[i]);
    os << "\n";
  }
}

}  // namespace zrepel
