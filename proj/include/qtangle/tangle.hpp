#pragma once

// Combinatorial tangle diagrams: generator layers read top to bottom.
//
// A diagram is a list of layers applied to a row of strands. Positions are
// 1-based. A cap at position i inserts two new strands at i and i+1; a cup at
// position i joins strands i and i+1; a crossing at position i crosses strands
// i and i+1 and carries one of four oriented types. Types {1,3} and {2,4} are
// the two unoriented crossing classes.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtangle {

enum class LayerKind { cap, cup, crossing };

struct Layer {
  LayerKind kind = LayerKind::cap;
  int position = 1;
  int ctype = 0;  // 1..4 for crossings, 0 otherwise

  static Layer cap(int i) { return {LayerKind::cap, i, 0}; }
  static Layer cup(int i) { return {LayerKind::cup, i, 0}; }
  static Layer crossing(int i, int type) { return {LayerKind::crossing, i, type}; }

  bool is_crossing() const { return kind == LayerKind::crossing; }

  int width_after(int width_before) const {
    switch (kind) {
      case LayerKind::cap: return width_before + 2;
      case LayerKind::cup: return width_before - 2;
      case LayerKind::crossing: return width_before;
    }
    return width_before;
  }

  std::string to_string() const {
    switch (kind) {
      case LayerKind::cap: return "cap " + std::to_string(position);
      case LayerKind::cup: return "cup " + std::to_string(position);
      case LayerKind::crossing:
        return "cross " + std::to_string(position) + " " + std::to_string(ctype);
    }
    return {};
  }

  friend bool operator==(const Layer&, const Layer&) = default;
};

/// Raised when a layer list is inconsistent with the declared widths.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& what, std::size_t layer_index, int expected, int actual)
      : std::invalid_argument(what), layer_index_(layer_index), expected_(expected), actual_(actual) {}

  /// 0-based index of the offending layer (== layer count for a final-width mismatch).
  std::size_t layer_index() const { return layer_index_; }
  int expected() const { return expected_; }
  int actual() const { return actual_; }

 private:
  std::size_t layer_index_;
  int expected_;
  int actual_;
};

/// Throws ValidationError at the first layer that does not fit its width.
inline void validate(int source, int target, const std::vector<Layer>& layers) {
  if (source < 0) throw ValidationError("negative source width", 0, 0, source);
  int w = source;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    const Layer& l = layers[k];
    const std::string where = "layer " + std::to_string(k + 1) + " (" + l.to_string() + ")";
    switch (l.kind) {
      case LayerKind::cap:
        if (l.position < 1 || l.position > w + 1)
          throw ValidationError(where + ": cap position must lie in 1.." + std::to_string(w + 1) +
                                    " at width " + std::to_string(w),
                                k, w + 1, l.position);
        break;
      case LayerKind::cup:
      case LayerKind::crossing:
        if (w < 2)
          throw ValidationError(where + ": needs width >= 2, got width " + std::to_string(w), k, 2, w);
        if (l.position < 1 || l.position > w - 1)
          throw ValidationError(where + ": position must lie in 1.." + std::to_string(w - 1) +
                                    " at width " + std::to_string(w),
                                k, w - 1, l.position);
        if (l.is_crossing() && (l.ctype < 1 || l.ctype > 4))
          throw ValidationError(where + ": crossing type must be 1..4", k, 4, l.ctype);
        break;
    }
    w = l.width_after(w);
  }
  if (w != target)
    throw ValidationError("final width " + std::to_string(w) + " does not match declared target " +
                              std::to_string(target),
                          layers.size(), target, w);
}

/// An (n, m) tangle diagram. Always valid once constructed.
class TangleDiagram {
 public:
  TangleDiagram() = default;
  TangleDiagram(int source, int target, std::vector<Layer> layers)
      : source_(source), target_(target), layers_(std::move(layers)) {
    validate(source_, target_, layers_);
  }

  static TangleDiagram identity(int n) { return TangleDiagram(n, n, {}); }

  int source_width() const { return source_; }
  int target_width() const { return target_; }
  const std::vector<Layer>& layers() const { return layers_; }
  bool is_link() const { return source_ == 0 && target_ == 0; }

  /// widths()[l] is the number of strands above layer l; size is layers+1.
  std::vector<int> widths() const {
    std::vector<int> w{source_};
    for (const Layer& l : layers_) w.push_back(l.width_after(w.back()));
    return w;
  }

  /// Layer indices of the crossings, in height order.
  std::vector<std::size_t> crossing_layers() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < layers_.size(); ++k)
      if (layers_[k].is_crossing()) out.push_back(k);
    return out;
  }
  std::size_t crossing_count() const {
    return static_cast<std::size_t>(
        std::count_if(layers_.begin(), layers_.end(), [](const Layer& l) { return l.is_crossing(); }));
  }
  bool is_crossingless() const { return crossing_count() == 0; }

  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;

 private:
  int source_ = 0;
  int target_ = 0;
  std::vector<Layer> layers_;
};

/// T followed by U (U stacked below T in reading order). Requires T.m == U.n.
inline TangleDiagram compose(const TangleDiagram& first, const TangleDiagram& second) {
  if (first.target_width() != second.source_width())
    throw std::invalid_argument("cannot compose: width " + std::to_string(first.target_width()) +
                                " does not match " + std::to_string(second.source_width()));
  std::vector<Layer> layers = first.layers();
  layers.insert(layers.end(), second.layers().begin(), second.layers().end());
  return TangleDiagram(first.source_width(), second.target_width(), std::move(layers));
}

inline int mirror_type(int ctype) {
  static constexpr std::array<int, 5> table{0, 2, 1, 4, 3};
  return table.at(static_cast<std::size_t>(ctype));
}

/// Reads the diagram backwards with caps and cups exchanged and every crossing switched.
inline TangleDiagram mirror(const TangleDiagram& t) {
  std::vector<Layer> out;
  out.reserve(t.layers().size());
  for (auto it = t.layers().rbegin(); it != t.layers().rend(); ++it) {
    switch (it->kind) {
      case LayerKind::cap: out.push_back(Layer::cup(it->position)); break;
      case LayerKind::cup: out.push_back(Layer::cap(it->position)); break;
      case LayerKind::crossing: out.push_back(Layer::crossing(it->position, mirror_type(it->ctype))); break;
    }
  }
  return TangleDiagram(t.target_width(), t.source_width(), std::move(out));
}

/// Closure of a braid on `strands` strands: nested caps, the word acting on the
/// right-hand half, then matching cups. Letter +k is a type-2 crossing of
/// strands k, k+1 and -k a type-1 crossing.
inline TangleDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  std::vector<Layer> layers;
  for (int c = 1; c <= strands; ++c) layers.push_back(Layer::cap(c));
  for (int letter : word) {
    const int k = letter < 0 ? -letter : letter;
    if (letter == 0 || k >= strands)
      throw std::invalid_argument("braid letter " + std::to_string(letter) + " out of range for " +
                                  std::to_string(strands) + " strands");
    layers.push_back(Layer::crossing(strands + k, letter > 0 ? 2 : 1));
  }
  for (int c = strands; c >= 1; --c) layers.push_back(Layer::cup(c));
  return TangleDiagram(0, 0, std::move(layers));
}

// ---------------------------------------------------------------------------
// Unoriented classes and smoothings

enum class CrossingClass { A, B };
enum class Smoothing { vertical, horizontal };  // "||" and "="

inline CrossingClass unoriented_class(int ctype) {
  if (ctype < 1 || ctype > 4) throw std::invalid_argument("crossing type must be 1..4");
  return (ctype == 1 || ctype == 3) ? CrossingClass::A : CrossingClass::B;
}

/// The 0- or 1-smoothing of a crossing of the given type.
inline Smoothing smoothing(int ctype, bool one) {
  const bool a = unoriented_class(ctype) == CrossingClass::A;
  return (a != one) ? Smoothing::vertical : Smoothing::horizontal;
}

/// A subset of the crossings, as a bit mask over 0-based crossing indices in height order.
struct Resolution {
  std::uint32_t mask = 0;

  bool contains(std::size_t crossing) const { return (mask >> crossing) & 1U; }
  int size() const { return std::popcount(mask); }
  Resolution with(std::size_t crossing) const { return {mask | (1U << crossing)}; }
  friend bool operator==(const Resolution&, const Resolution&) = default;
};

inline constexpr std::size_t max_cube_crossings = 24;

/// A diagram made only of caps and cups.
class CrossinglessDiagram {
 public:
  explicit CrossinglessDiagram(TangleDiagram d) : d_(std::move(d)) {
    if (!d_.is_crossingless()) throw std::invalid_argument("diagram has crossings");
  }
  const TangleDiagram& diagram() const { return d_; }

 private:
  TangleDiagram d_;
};

/// Replaces every crossing by its smoothing under `r`: "||" drops the layer,
/// "=" becomes a cup followed by a cap at the same position.
inline CrossinglessDiagram resolve(const TangleDiagram& t, Resolution r) {
  std::vector<Layer> out;
  std::size_t c = 0;
  for (const Layer& l : t.layers()) {
    if (!l.is_crossing()) {
      out.push_back(l);
      continue;
    }
    if (smoothing(l.ctype, r.contains(c++)) == Smoothing::horizontal) {
      out.push_back(Layer::cup(l.position));
      out.push_back(Layer::cap(l.position));
    }
  }
  if (c < 32 && (r.mask >> c) != 0) throw std::invalid_argument("resolution refers to a missing crossing");
  return CrossinglessDiagram(TangleDiagram(t.source_width(), t.target_width(), std::move(out)));
}

/// Resolves the single crossing with index `crossing` and keeps all others.
inline TangleDiagram smooth_one(const TangleDiagram& t, std::size_t crossing, bool one) {
  std::vector<Layer> out;
  std::size_t c = 0;
  for (const Layer& l : t.layers()) {
    if (l.is_crossing() && c++ == crossing) {
      if (smoothing(l.ctype, one) == Smoothing::horizontal) {
        out.push_back(Layer::cup(l.position));
        out.push_back(Layer::cap(l.position));
      }
      continue;
    }
    out.push_back(l);
  }
  if (crossing >= c) throw std::out_of_range("crossing index out of range");
  return TangleDiagram(t.source_width(), t.target_width(), std::move(out));
}

// ---------------------------------------------------------------------------
// Strand graph

/// Disjoint-set forest with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// How the strand graph treats crossing layers.
enum class CrossingMode { pass_through, vertical, horizontal };

/// The graph whose nodes are the (level, slot) points between layers and whose
/// edges are the arcs inside each layer. Level l sits above layer l.
class StrandGraph {
 public:
  /// `mode_of(c)` gives the treatment of the c-th crossing (height order).
  template <class ModeOf>
  StrandGraph(const TangleDiagram& t, ModeOf&& mode_of) : widths_(t.widths()) {
    offsets_.reserve(widths_.size() + 1);
    std::size_t total = 0;
    for (int w : widths_) {
      offsets_.push_back(total);
      total += static_cast<std::size_t>(w);
    }
    offsets_.push_back(total);

    DisjointSets sets(total);
    std::size_t crossing = 0;
    for (std::size_t k = 0; k < t.layers().size(); ++k) {
      const Layer& l = t.layers()[k];
      const int w = widths_[k];
      const int i = l.position;
      auto top = [&](int p) { return node(k, p); };
      auto bot = [&](int p) { return node(k + 1, p); };
      switch (l.kind) {
        case LayerKind::cap:
          for (int p = 1; p <= w; ++p) sets.unite(top(p), bot(p < i ? p : p + 2));
          sets.unite(bot(i), bot(i + 1));
          break;
        case LayerKind::cup:
          for (int p = 1; p <= w; ++p)
            if (p < i || p > i + 1) sets.unite(top(p), bot(p < i ? p : p - 2));
          sets.unite(top(i), top(i + 1));
          break;
        case LayerKind::crossing: {
          for (int p = 1; p <= w; ++p)
            if (p != i && p != i + 1) sets.unite(top(p), bot(p));
          switch (static_cast<CrossingMode>(mode_of(crossing++))) {
            case CrossingMode::pass_through:
              sets.unite(top(i), bot(i + 1));
              sets.unite(top(i + 1), bot(i));
              break;
            case CrossingMode::vertical:
              sets.unite(top(i), bot(i));
              sets.unite(top(i + 1), bot(i + 1));
              break;
            case CrossingMode::horizontal:
              sets.unite(top(i), top(i + 1));
              sets.unite(bot(i), bot(i + 1));
              break;
          }
          break;
        }
      }
    }

    // Canonical component ids: ordered by the smallest node they contain.
    component_.assign(total, -1);
    std::vector<int> id_of_root(total, -1);
    int next = 0;
    for (std::size_t v = 0; v < total; ++v) {
      const std::size_t r = sets.find(v);
      if (id_of_root[r] < 0) id_of_root[r] = next++;
      component_[v] = id_of_root[r];
    }
    closed_.assign(static_cast<std::size_t>(next), true);
    const std::size_t last = widths_.size() - 1;
    for (int p = 1; p <= widths_.front(); ++p) closed_[static_cast<std::size_t>(component_[node(0, p)])] = false;
    for (int p = 1; p <= widths_.back(); ++p) closed_[static_cast<std::size_t>(component_[node(last, p)])] = false;
  }

  std::size_t node(std::size_t level, int slot) const {
    return offsets_[level] + static_cast<std::size_t>(slot - 1);
  }
  std::size_t node_count() const { return offsets_.back(); }
  std::size_t level_count() const { return widths_.size(); }
  const std::vector<int>& widths() const { return widths_; }

  int component_of(std::size_t node) const { return component_[node]; }
  const std::vector<int>& components() const { return component_; }
  std::size_t component_count() const { return closed_.size(); }
  bool is_closed(int component) const { return closed_[static_cast<std::size_t>(component)]; }

 private:
  std::vector<int> widths_;
  std::vector<std::size_t> offsets_;
  std::vector<int> component_;
  std::vector<bool> closed_;
};

/// Circles and open arcs of a crossingless diagram.
struct CircleTrace {
  int circle_count = 0;
  int arc_count = 0;
  /// Indexed by StrandGraph node id: circle id, or -1 when the node lies on an arc.
  std::vector<int> circle_of_node;
  /// Indexed by StrandGraph node id: arc id, or -1 when the node lies on a circle.
  std::vector<int> arc_of_node;
  /// Arc id of each boundary slot: source slots first, then target slots.
  std::vector<int> open_strands;
  /// widths of the levels, for locating nodes: node(level, slot) = offset(level) + slot - 1.
  std::vector<std::size_t> level_offsets;
};

/// Connected components of the strand graph of a crossingless diagram. Circle
/// and arc ids are assigned in order of the smallest (level, slot) they touch.
inline CircleTrace trace_circles(const CrossinglessDiagram& c) {
  const TangleDiagram& t = c.diagram();
  StrandGraph g(t, [](std::size_t) { return CrossingMode::vertical; });
  CircleTrace out;
  out.circle_of_node.assign(g.node_count(), -1);
  out.arc_of_node.assign(g.node_count(), -1);
  std::vector<int> remap(g.component_count(), -1);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const int comp = g.component_of(v);
    auto& slot = remap[static_cast<std::size_t>(comp)];
    if (slot < 0) slot = g.is_closed(comp) ? out.circle_count++ : out.arc_count++;
    (g.is_closed(comp) ? out.circle_of_node : out.arc_of_node)[v] = slot;
  }
  const std::size_t last = g.level_count() - 1;
  for (int p = 1; p <= t.source_width(); ++p) out.open_strands.push_back(out.arc_of_node[g.node(0, p)]);
  for (int p = 1; p <= t.target_width(); ++p) out.open_strands.push_back(out.arc_of_node[g.node(last, p)]);
  std::size_t off = 0;
  for (int w : g.widths()) {
    out.level_offsets.push_back(off);
    off += static_cast<std::size_t>(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Crossing bookkeeping

struct CrossingCounts {
  std::array<int, 4> k{};  // k[0] = number of type-1 crossings, ...
  int r = 0;               // homological shift  k1 - k2 - k3 + k4
  int s = 0;               // grading shift     -k1 + 2k2 + 2k3 - k4

  int n_plus() const { return k[0] + k[3]; }
  int n_minus() const { return k[1] + k[2]; }
  friend bool operator==(const CrossingCounts&, const CrossingCounts&) = default;
};

inline CrossingCounts crossing_counts(const TangleDiagram& t) {
  CrossingCounts c;
  for (const Layer& l : t.layers())
    if (l.is_crossing()) ++c.k[static_cast<std::size_t>(l.ctype - 1)];
  const auto [k1, k2, k3, k4] = c.k;
  c.r = k1 - k2 - k3 + k4;
  c.s = -k1 + 2 * k2 + 2 * k3 - k4;
  return c;
}

/// Number of components of a link diagram, following strands through crossings.
inline int component_count(const TangleDiagram& k) {
  if (!k.is_link()) throw std::invalid_argument("component_count needs a (0,0) diagram");
  StrandGraph g(k, [](std::size_t) { return CrossingMode::pass_through; });
  return static_cast<int>(g.component_count());
}

/// A point on a link diagram: a (level, slot) node of its strand graph.
struct Mark {
  std::size_t level = 0;
  int slot = 1;
  friend bool operator==(const Mark&, const Mark&) = default;
};

/// The k-th (1 or 2) strand created by the c-th cap layer (both 1-based).
inline Mark mark_from_cap(const TangleDiagram& t, int cap_number, int strand) {
  if (strand != 1 && strand != 2) throw std::invalid_argument("mark strand must be 1 or 2");
  int seen = 0;
  for (std::size_t k = 0; k < t.layers().size(); ++k) {
    const Layer& l = t.layers()[k];
    if (l.kind == LayerKind::cap && ++seen == cap_number) return {k + 1, l.position + strand - 1};
  }
  throw std::invalid_argument("diagram has no cap layer number " + std::to_string(cap_number));
}

/// The same point viewed on mirror(t).
inline Mark mirror_mark(const TangleDiagram& t, Mark m) { return {t.layers().size() - m.level, m.slot}; }

inline void check_mark(const TangleDiagram& t, Mark m) {
  const auto w = t.widths();
  if (m.level >= w.size() || m.slot < 1 || m.slot > w[m.level])
    throw std::invalid_argument("mark (" + std::to_string(m.level) + ", " + std::to_string(m.slot) +
                                ") is not a point of the diagram");
}

}  // namespace qtangle
