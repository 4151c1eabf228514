#pragma once

// Instances of the generating isotopy relations between tangle diagrams, and
// suites that check them in the matrix model and the K-group model.

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <set>
#include <string>
#include <vector>

#include "qtangle/ktheory.hpp"
#include "qtangle/laurent_matrix.hpp"
#include "qtangle/rt.hpp"
#include "qtangle/tangle.hpp"

namespace qtangle {

struct RelationInstance {
  std::string family;
  std::string key;  // parameters, e.g. "w=3 i=1 k=2 l=4"
  TangleDiagram lhs;
  TangleDiagram rhs;
};

inline const std::vector<std::string>& relation_families() {
  static const std::vector<std::string> names{
      "R0",       "R1",           "R2",           "R3",       "cap-cap",         "cup-cup",
      "cup-cap",  "cap-crossing", "cup-crossing", "crossing-crossing", "pitchfork"};
  return names;
}

namespace detail {

inline int max_width(const TangleDiagram& t) {
  const auto w = t.widths();
  return *std::max_element(w.begin(), w.end());
}

class InstanceSink {
 public:
  explicit InstanceSink(int max_w) : max_w_(max_w) {}

  /// Records lhs == rhs from source width w when both sides are valid and fit.
  void add(const std::string& family, const std::string& key, int w, std::vector<Layer> lhs,
           std::vector<Layer> rhs) {
    int target_l = w;
    for (const Layer& l : lhs) target_l = l.width_after(target_l);
    int target_r = w;
    for (const Layer& l : rhs) target_r = l.width_after(target_r);
    if (target_l != target_r || target_l < 0) return;
    try {
      TangleDiagram a(w, target_l, std::move(lhs));
      TangleDiagram b(w, target_r, std::move(rhs));
      if (max_width(a) > max_w_ || max_width(b) > max_w_) return;
      const std::string full = "w=" + std::to_string(w) + " " + key;
      if (!seen_.emplace(family + "|" + full).second) return;
      out_.push_back({family, full, std::move(a), std::move(b)});
    } catch (const ValidationError&) {
      // parameters outside the admissible range for this width
    }
  }

  std::vector<RelationInstance> take() { return std::move(out_); }

 private:
  int max_w_;
  std::set<std::string> seen_;
  std::vector<RelationInstance> out_;
};

inline std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s;
  for (const auto& [name, v] : kv) {
    if (!s.empty()) s += ' ';
    s += name;
    s += '=';
    s += std::to_string(v);
  }
  return s;
}

}  // namespace detail

/// Every instance whose diagrams never exceed `max_width` strands.
/// k ranges over k >= 2 and l, m over all four crossing types unless the
/// relation fixes them.
inline std::vector<RelationInstance> relation_instances(int max_width) {
  using L = Layer;
  using detail::params;
  detail::InstanceSink sink(max_width);
  for (int w = 0; w <= max_width; ++w) {
    for (int i = 1; i <= max_width + 1; ++i) {
      sink.add("R0", params({{"i", i}, {"form", 1}}), w, {L::cap(i + 1), L::cup(i)}, {});
      sink.add("R0", params({{"i", i}, {"form", 2}}), w, {L::cap(i), L::cup(i + 1)}, {});
      for (int l : {1, 2}) {
        sink.add("R1", params({{"i", i}, {"d", +1}, {"l", l}}), w, {L::cap(i), L::crossing(i + 1, l), L::cup(i)}, {});
        sink.add("R1", params({{"i", i}, {"d", -1}, {"l", l}}), w, {L::cap(i), L::crossing(i - 1, l), L::cup(i)}, {});
      }
      sink.add("R2", params({{"i", i}, {"form", 1}}), w, {L::crossing(i, 1), L::crossing(i, 2)}, {});
      sink.add("R2", params({{"i", i}, {"form", 2}}), w, {L::crossing(i, 2), L::crossing(i, 1)}, {});
      for (int l = 1; l <= 4; ++l)
        sink.add("R3", params({{"i", i}, {"l", l}}), w, {L::crossing(i, l), L::crossing(i + 1, l), L::crossing(i, l)},
                 {L::crossing(i + 1, l), L::crossing(i, l), L::crossing(i + 1, l)});
      for (int k = 2; k <= max_width + 1; ++k) {
        const auto p = [&](int form) { return params({{"i", i}, {"k", k}, {"form", form}}); };
        sink.add("cap-cap", p(1), w, {L::cap(i), L::cap(i + k)}, {L::cap(i + k - 2), L::cap(i)});
        sink.add("cup-cup", p(1), w, {L::cup(i), L::cup(i + k - 2)}, {L::cup(i + k), L::cup(i)});
        sink.add("cup-cap", p(1), w, {L::cup(i), L::cap(i + k - 2)}, {L::cap(i + k), L::cup(i)});
        sink.add("cup-cap", p(2), w, {L::cup(i + k - 2), L::cap(i)}, {L::cap(i), L::cup(i + k)});
        for (int l = 1; l <= 4; ++l) {
          const auto pl = [&](int form) { return params({{"i", i}, {"k", k}, {"l", l}, {"form", form}}); };
          sink.add("cap-crossing", pl(1), w, {L::crossing(i + k - 2, l), L::cap(i)}, {L::cap(i), L::crossing(i + k, l)});
          sink.add("cap-crossing", pl(2), w, {L::crossing(i, l), L::cap(i + k)}, {L::cap(i + k), L::crossing(i, l)});
          sink.add("cup-crossing", pl(1), w, {L::crossing(i + k, l), L::cup(i)}, {L::cup(i), L::crossing(i + k - 2, l)});
          sink.add("cup-crossing", pl(2), w, {L::crossing(i, l), L::cup(i + k)}, {L::cup(i + k), L::crossing(i, l)});
        }
      }
      for (int j = i + 2; j <= max_width; ++j)
        for (int l = 1; l <= 4; ++l)
          for (int m = 1; m <= 4; ++m)
            sink.add("crossing-crossing", params({{"i", i}, {"j", j}, {"l", l}, {"m", m}}), w,
                     {L::crossing(i, l), L::crossing(j, m)}, {L::crossing(j, m), L::crossing(i, l)});
      sink.add("pitchfork", params({{"i", i}, {"form", 1}}), w, {L::cap(i + 1), L::crossing(i, 1)},
               {L::cap(i), L::crossing(i + 1, 4)});
      sink.add("pitchfork", params({{"i", i}, {"form", 2}}), w, {L::cap(i + 1), L::crossing(i, 2)},
               {L::cap(i), L::crossing(i + 1, 3)});
    }
  }
  return sink.take();
}

enum class Model { rt, ktheory };

inline const char* to_string(Model m) { return m == Model::rt ? "rt" : "ktheory"; }

/// The matrix a model assigns to a diagram.
inline LaurentMatrix model_matrix(Model model, const TangleDiagram& t, Type4Scalar t4 = Type4Scalar::kernel_shift) {
  return model == Model::rt ? psi(t, t4) : operator_matrix(t, t4);
}

struct RelationResult {
  const RelationInstance* instance = nullptr;
  bool pass = false;
};

inline std::vector<RelationResult> check_relations(const std::vector<RelationInstance>& instances, Model model,
                                                   Type4Scalar t4 = Type4Scalar::kernel_shift) {
  std::vector<RelationResult> out;
  out.reserve(instances.size());
  for (const auto& inst : instances)
    out.push_back({&inst, model_matrix(model, inst.lhs, t4) == model_matrix(model, inst.rhs, t4)});
  return out;
}

/// psi(Cross(i,2)) == -q^-1 (q^-1 psi(Cap(i)) psi(Cup(i)) + id) on width n.
inline bool kauffman_holds(int i, int n) {
  const LaurentMatrix cross = psi_gen(Layer::crossing(i, 2), n);
  const LaurentMatrix loop = psi_gen(Layer::cap(i), n - 2) * psi_gen(Layer::cup(i), n);
  const LaurentMatrix rhs =
      (loop.scaled(LaurentPoly::q(-1)) + LaurentMatrix::identity(basis_size(n))).scaled(LaurentPoly::monomial(-1, -1));
  return cross == rhs;
}

}  // namespace qtangle
