#pragma once

// Text and JSON renderings of results.

#include <algorithm>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "qtangle/complex.hpp"
#include "qtangle/laurent.hpp"

namespace qtangle {

inline std::string format_laurent(const LaurentPoly& p) { return p.to_string(); }

/// Sorted array of {"i","j","dim"} objects, compact.
inline nlohmann::ordered_json dims_json(const BigradedDims& d) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [deg, n] : d.entries()) {
    nlohmann::ordered_json e;
    e["i"] = deg.first;
    e["j"] = deg.second;
    e["dim"] = n;
    arr.push_back(std::move(e));
  }
  return arr;
}

inline std::string format_dims_json(const BigradedDims& d) { return dims_json(d).dump(); }

/// A table with one row per j (descending) and one column per i (ascending).
/// Empty cells print as '.'.
inline std::string format_dims_table(const BigradedDims& d, const char* row_label = "j", const char* col_label = "i") {
  if (d.empty()) return "(zero)\n";
  int imin = d.entries().begin()->first.first, imax = imin;
  int jmin = d.entries().begin()->first.second, jmax = jmin;
  for (const auto& [deg, n] : d.entries()) {
    imin = std::min(imin, deg.first);
    imax = std::max(imax, deg.first);
    jmin = std::min(jmin, deg.second);
    jmax = std::max(jmax, deg.second);
  }
  auto cell = [](const std::string& s) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%5s", s.c_str());
    return std::string(buf);
  };
  std::string out = cell(std::string(row_label) + "\\" + col_label);
  for (int i = imin; i <= imax; ++i) out += cell(std::to_string(i));
  out += '\n';
  for (int j = jmax; j >= jmin; --j) {
    bool any = false;
    for (int i = imin; i <= imax; ++i) any = any || d.at(i, j) != 0;
    if (!any) continue;
    out += cell(std::to_string(j));
    for (int i = imin; i <= imax; ++i) out += cell(d.at(i, j) ? std::to_string(d.at(i, j)) : ".");
    out += '\n';
  }
  return out;
}

}  // namespace qtangle
