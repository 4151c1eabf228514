#pragma once

// The standard (unsheared) Khovanov bracket, built independently of
// khovanov.hpp: circles come from resolve() and trace_circles() on the
// crossingless diagrams rather than from the strand graph of K, and gradings
// follow the usual (h, q) formulas
//   h = |delta| - n_-,   q = #1 - #x + |delta| + n_+ - 2 n_-
// with the Frobenius algebra <1, x>, deg 1 = +1 and deg x = -1.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "qtangle/complex.hpp"
#include "qtangle/khovanov.hpp"
#include "qtangle/tangle.hpp"

namespace qtangle {

namespace detail {

/// One vertex of the standard cube: the circle of each node at an original level.
struct StandardVertex {
  int circles = 0;
  std::vector<std::vector<int>> circle_at;  // [original level][slot - 1]
};

inline StandardVertex standard_vertex(const TangleDiagram& k, Resolution r) {
  const CircleTrace trace = trace_circles(resolve(k, r));
  StandardVertex v;
  v.circles = trace.circle_count;
  const auto widths = k.widths();
  std::size_t resolved_level = 0;
  std::size_t crossing = 0;
  for (std::size_t level = 0; level < widths.size(); ++level) {
    std::vector<int> row;
    for (int p = 1; p <= widths[level]; ++p)
      row.push_back(trace.circle_of_node.at(trace.level_offsets.at(resolved_level) + static_cast<std::size_t>(p - 1)));
    v.circle_at.push_back(std::move(row));
    if (level == k.layers().size()) break;
    const Layer& l = k.layers()[level];
    if (!l.is_crossing())
      resolved_level += 1;
    else if (smoothing(l.ctype, r.contains(crossing++)) == Smoothing::horizontal)
      resolved_level += 2;
  }
  return v;
}

}  // namespace detail

/// The standard Khovanov complex in (h, q) grading.
inline ChainComplex standard_complex(const TangleDiagram& k) {
  if (!k.is_link()) throw std::invalid_argument("the Khovanov bracket needs a (0,0) link diagram");
  const auto cl = k.crossing_layers();
  const std::size_t n = cl.size();
  if (n > max_cube_crossings) throw std::invalid_argument("too many crossings for the cube");
  const CrossingCounts counts = crossing_counts(k);
  const int np = counts.n_plus();
  const int nm = counts.n_minus();

  ChainComplex cx;
  std::vector<detail::StandardVertex> vertex;
  std::vector<std::size_t> base;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    vertex.push_back(detail::standard_vertex(k, Resolution{m}));
    base.push_back(cx.size());
    const int size = std::popcount(m);
    const int c = vertex.back().circles;
    for (std::uint32_t xs = 0; xs < (std::uint32_t{1} << c); ++xs) {
      const int nx = std::popcount(xs);
      cx.add_generator(size - nm, (c - nx) - nx + size + np - 2 * nm);
    }
  }

  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    const auto& from = vertex[m];
    for (std::size_t s = 0; s < n; ++s) {
      if (m & (std::uint32_t{1} << s)) continue;
      const std::uint32_t m2 = m | (std::uint32_t{1} << s);
      const auto& to = vertex[m2];
      int sign = 1;
      for (std::size_t t = 0; t < s; ++t)
        if (m & (std::uint32_t{1} << t)) sign = -sign;

      const std::size_t level = cl[s];
      const int pos = k.layers()[level].position;
      std::set<int> old_touched, new_touched;
      for (std::size_t lv : {level, level + 1})
        for (int p : {pos, pos + 1}) {
          old_touched.insert(from.circle_at[lv][static_cast<std::size_t>(p - 1)]);
          new_touched.insert(to.circle_at[lv][static_cast<std::size_t>(p - 1)]);
        }
      std::map<int, int> carry;  // untouched old circle -> new circle
      for (std::size_t lv = 0; lv < from.circle_at.size(); ++lv)
        for (std::size_t p = 0; p < from.circle_at[lv].size(); ++p)
          if (!old_touched.count(from.circle_at[lv][p])) carry[from.circle_at[lv][p]] = to.circle_at[lv][p];
      if (static_cast<int>(carry.size()) + static_cast<int>(old_touched.size()) != from.circles)
        throw std::logic_error("circle lost between resolutions");

      const std::vector<int> olds(old_touched.begin(), old_touched.end());
      const std::vector<int> news(new_touched.begin(), new_touched.end());
      for (std::uint32_t xs = 0; xs < (std::uint32_t{1} << from.circles); ++xs) {
        std::uint32_t fixed = 0;
        for (const auto& [o, nw] : carry)
          if (xs & (std::uint32_t{1} << o)) fixed |= std::uint32_t{1} << nw;
        auto x_on = [&](int c) { return (xs >> c) & 1U; };
        std::vector<std::uint32_t> targets;
        if (olds.size() == 2 && news.size() == 1) {
          // m(1,1) = 1, m(1,x) = m(x,1) = x, m(x,x) = 0
          const unsigned xcount = x_on(olds[0]) + x_on(olds[1]);
          if (xcount == 2) continue;
          targets.push_back(fixed | (xcount == 1 ? std::uint32_t{1} << news[0] : 0U));
        } else if (olds.size() == 1 && news.size() == 2) {
          // D(1) = 1 x + x 1, D(x) = x x
          const std::uint32_t a = std::uint32_t{1} << news[0];
          const std::uint32_t b = std::uint32_t{1} << news[1];
          if (x_on(olds[0])) {
            targets.push_back(fixed | a | b);
          } else {
            targets.push_back(fixed | a);
            targets.push_back(fixed | b);
          }
        } else {
          throw std::logic_error("crossing change is neither a merge nor a split");
        }
        for (std::uint32_t t : targets) cx.add_to_differential(base[m] + xs, base[m2] + t, sign);
      }
    }
  }
  return cx;
}

/// Khovanov homology Kh^{h,q}(K) over Q.
inline BigradedDims h_kh_standard(const TangleDiagram& k) { return standard_complex(k).homology(); }

/// Whether H_alg^{i,j}(K) = Kh^{i+j,j}(K) for all (i, j).
inline bool shear_check(const BigradedDims& alg, const BigradedDims& kh) {
  BigradedDims sheared;
  for (const auto& [deg, n] : alg.entries()) sheared.add(deg.first + deg.second, deg.second, n);
  return sheared == kh;
}

inline bool shear_check(const TangleDiagram& k) { return shear_check(h_alg(k), h_kh_standard(k)); }

}  // namespace qtangle
