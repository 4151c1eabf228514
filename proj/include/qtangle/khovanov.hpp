#pragma once

// The sheared Khovanov complex M(K) of a link diagram: the cube of
// resolutions with merge/split edge maps, graded so that the differential has
// bidegree (1, 0).
//
// Each circle carries V = <v-, v+>. A state (delta, labeling) sits at
//   i = #plus - #minus,   j = #minus - #plus + |delta|
// and H_alg^{i,j}(K) = H^{i+r, j+s}(M(K)).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qtangle/complex.hpp"
#include "qtangle/laurent.hpp"
#include "qtangle/tangle.hpp"

namespace qtangle {

/// A resolution with a labeling of its circles; bit c of `plus` is set when
/// circle c carries v+.
struct CubeState {
  Resolution delta;
  std::uint32_t plus = 0;
  friend bool operator==(const CubeState&, const CubeState&) = default;
};

struct CubeComplex {
  ChainComplex complex;  // unshifted grading
  std::vector<CubeState> states;  // indexed by generator
  std::size_t crossings = 0;
  CrossingCounts counts;
  std::vector<int> circle_counts;  // indexed by resolution mask
  /// Per generator: whether the marked circle carries v+ (empty without a mark).
  std::vector<bool> marked_plus;
};

namespace detail {

/// Circle ids of every node of K under the resolution `r`.
inline StrandGraph resolved_graph(const TangleDiagram& k, Resolution r) {
  std::vector<int> ctypes;
  for (const Layer& l : k.layers())
    if (l.is_crossing()) ctypes.push_back(l.ctype);
  return StrandGraph(k, [&](std::size_t c) {
    return smoothing(ctypes[c], r.contains(c)) == Smoothing::vertical ? CrossingMode::vertical
                                                                      : CrossingMode::horizontal;
  });
}

inline int sheared_i(int circles, std::uint32_t plus) {
  const int p = std::popcount(plus);
  return p - (circles - p);
}

inline int sheared_j(int circles, std::uint32_t plus, int size) {
  const int p = std::popcount(plus);
  return (circles - p) - p + size;
}

constexpr int max_circles = 30;

}  // namespace detail

/// Builds M(K). With a mark, records which states label the marked circle v+.
inline CubeComplex build_cube(const TangleDiagram& k, std::optional<Mark> mark = std::nullopt) {
  if (!k.is_link()) throw std::invalid_argument("build_cube needs a (0,0) link diagram");
  if (mark) check_mark(k, *mark);
  const auto layers = k.crossing_layers();
  const std::size_t n = layers.size();
  if (n > max_cube_crossings) throw std::invalid_argument("too many crossings for the cube");

  CubeComplex cube;
  cube.crossings = n;
  cube.counts = crossing_counts(k);
  const std::size_t vertices = std::size_t{1} << n;

  std::vector<StrandGraph> graphs;
  graphs.reserve(vertices);
  std::vector<std::size_t> first_gen(vertices);
  for (std::uint32_t m = 0; m < vertices; ++m) {
    graphs.push_back(detail::resolved_graph(k, Resolution{m}));
    const int circles = static_cast<int>(graphs.back().component_count());
    if (circles > detail::max_circles) throw std::invalid_argument("too many circles for the cube");
    cube.circle_counts.push_back(circles);
    first_gen[m] = cube.complex.size();
    const int size = std::popcount(m);
    for (std::uint32_t plus = 0; plus < (std::uint32_t{1} << circles); ++plus) {
      cube.complex.add_generator(detail::sheared_i(circles, plus), detail::sheared_j(circles, plus, size));
      cube.states.push_back({Resolution{m}, plus});
    }
  }

  if (mark) {
    cube.marked_plus.resize(cube.states.size());
    for (std::size_t g = 0; g < cube.states.size(); ++g) {
      const auto& st = cube.states[g];
      const StrandGraph& gr = graphs[st.delta.mask];
      const int c = gr.component_of(gr.node(mark->level, mark->slot));
      cube.marked_plus[g] = (st.plus >> c) & 1U;
    }
  }

  for (std::uint32_t m = 0; m < vertices; ++m) {
    const StrandGraph& from = graphs[m];
    const int circles = cube.circle_counts[m];
    for (std::size_t s = 0; s < n; ++s) {
      if ((m >> s) & 1U) continue;
      const std::uint32_t m2 = m | (std::uint32_t{1} << s);
      const StrandGraph& to = graphs[m2];
      const int circles2 = cube.circle_counts[m2];
      const int sign = (std::popcount(m & ((std::uint32_t{1} << s) - 1)) % 2 == 0) ? 1 : -1;

      // Circle correspondence away from the crossing, through shared nodes.
      std::vector<int> image(static_cast<std::size_t>(circles), -1);
      for (std::size_t v = 0; v < from.node_count(); ++v) image[from.component_of(v)] = to.component_of(v);
      const std::size_t level = layers[s];
      const int pos = k.layers()[level].position;
      const std::size_t nodes[4] = {from.node(level, pos), from.node(level, pos + 1), from.node(level + 1, pos),
                                    from.node(level + 1, pos + 1)};
      const int a = from.component_of(nodes[0]);
      int b = a;
      for (std::size_t v : nodes)
        if (from.component_of(v) != a) b = from.component_of(v);
      int c1 = to.component_of(nodes[0]);
      int c2 = c1;
      for (std::size_t v : nodes)
        if (to.component_of(v) != c1) c2 = to.component_of(v);

      const bool merge = a != b;
      if (merge == (c1 != c2) || circles2 != circles + (merge ? -1 : 1))
        throw std::logic_error("cube edge is neither a merge nor a split");

      for (std::uint32_t plus = 0; plus < (std::uint32_t{1} << circles); ++plus) {
        std::uint32_t rest = 0;  // labels of the untouched circles, in target numbering
        for (int c = 0; c < circles; ++c)
          if (c != a && c != b && ((plus >> c) & 1U)) rest |= std::uint32_t{1} << image[c];
        const std::size_t src = first_gen[m] + plus;
        auto emit = [&](std::uint32_t labels) {
          cube.complex.add_to_differential(src, first_gen[m2] + labels, sign);
        };
        if (merge) {
          const bool pa = (plus >> a) & 1U;
          const bool pb = (plus >> b) & 1U;
          if (pa && pb) continue;                                        // v+ v+ -> 0
          emit(rest | ((pa || pb) ? std::uint32_t{1} << c1 : 0U));       // v- is the unit
        } else {
          if ((plus >> a) & 1U) {
            emit(rest | (std::uint32_t{1} << c1) | (std::uint32_t{1} << c2));  // v+ -> v+ v+
          } else {
            emit(rest | (std::uint32_t{1} << c2));  // v- -> v- v+ + v+ v-
            emit(rest | (std::uint32_t{1} << c1));
          }
        }
      }
    }
  }
  return cube;
}

/// H_alg(K) = H(M(K)) regraded by (r, s).
inline BigradedDims h_alg(const TangleDiagram& k) {
  const CubeComplex cube = build_cube(k);
  return cube.complex.homology().shifted(-cube.counts.r, -cube.counts.s);
}

/// The subcomplex of M(K) where the marked circle carries v+.
inline ChainComplex reduced_complex(const CubeComplex& cube) {
  if (cube.marked_plus.empty()) throw std::invalid_argument("cube was built without a mark");
  return cube.complex.subcomplex([&](std::size_t g) { return cube.marked_plus[g]; });
}

/// Reduced homology, normalized so that the unknot has a single generator at (0, 0):
/// the raw degrees move by -(1, -1) and then by the (r, s) shift.
inline BigradedDims reduced(const TangleDiagram& k, Mark mark) {
  const CubeComplex cube = build_cube(k, mark);
  return reduced_complex(cube).homology().shifted(-cube.counts.r - 1, -cube.counts.s + 1);
}

}  // namespace qtangle
