#pragma once

// The Grothendieck-group model: the free Z[q, q^-1] module on the monomials
// prod_j [E_j]^{delta_j}, delta in {0,1}^n, with cap, cup and crossing
// operators, and the intertwiner alpha onto V^{(x)n}.
//
// delta is stored as a bit mask in the same layout as the basis of V^{(x)n}:
// position 1 is the most significant of n bits.

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtangle/laurent.hpp"
#include "qtangle/laurent_matrix.hpp"
#include "qtangle/rt.hpp"
#include "qtangle/tangle.hpp"

namespace qtangle {

/// A finitely supported vector over Z[q, q^-1] in a basis indexed by n-bit masks.
/// The tag keeps K-group vectors and V^{(x)n} vectors apart.
template <class Tag>
struct SparseVector {
  int width = 0;
  std::map<std::uint64_t, LaurentPoly> terms;  // no zero coefficients

  SparseVector() = default;
  explicit SparseVector(int w) : width(w) { basis_size(w); }

  static SparseVector basis(int w, std::uint64_t index, LaurentPoly c = LaurentPoly(1)) {
    SparseVector v(w);
    v.add(index, c);
    return v;
  }

  bool is_zero() const { return terms.empty(); }
  LaurentPoly coeff(std::uint64_t index) const {
    auto it = terms.find(index);
    return it == terms.end() ? LaurentPoly{} : it->second;
  }
  void add(std::uint64_t index, const LaurentPoly& c) {
    if (index >= basis_size(width)) throw std::out_of_range("basis index out of range");
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  SparseVector& operator+=(const SparseVector& o) {
    if (o.width != width) throw std::invalid_argument("vector widths differ");
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator*(const LaurentPoly& s, const SparseVector& v) {
    SparseVector out(v.width);
    for (const auto& [k, c] : v.terms) out.add(k, s * c);
    return out;
  }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

struct KGroupTag {};
struct RepTag {};
using KVector = SparseVector<KGroupTag>;
using RepVector = SparseVector<RepTag>;

namespace detail {

inline void check_pair_index(int i, int n, const char* what) {
  if (i < 1 || i > n - 1)
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(i) + " out of range at width " +
                            std::to_string(n));
}

}  // namespace detail

/// sum_i i * delta_i.
inline int weighted_degree(std::uint64_t delta, int n) {
  int s = 0;
  for (int i = 1; i <= n; ++i) s += i * static_cast<int>(strand_bit(delta, n, i));
  return s;
}

/// Cap at position i, from width n-2 to width n.
inline KVector cap_op(int i, int n, const KVector& v) {
  detail::check_pair_index(i, n, "cap_op");
  if (v.width != n - 2) throw std::invalid_argument("cap_op: input width must be n-2");
  KVector out(n);
  const int low_bits = n - i - 1;  // positions >= i of the input
  for (const auto& [d, c] : v.terms) {
    const std::uint64_t high = d >> low_bits;
    const std::uint64_t low = d & ((std::uint64_t{1} << low_bits) - 1);
    const int e = i - 1 + 2 * std::popcount(low);
    auto at = [&](std::uint64_t local) { return (high << (low_bits + 2)) | (local << low_bits) | low; };
    out.add(at(0b10), c.shifted(e));
    out.add(at(0b01), (-c).shifted(e + 2));
  }
  return out;
}

/// Cup at position i, from width n to width n-2.
inline KVector cup_op(int i, int n, const KVector& v) {
  detail::check_pair_index(i, n, "cup_op");
  if (v.width != n) throw std::invalid_argument("cup_op: input width must be n");
  KVector out(n - 2);
  const int low_bits = n - i - 1;  // positions >= i+2
  for (const auto& [d, c] : v.terms) {
    const std::uint64_t local = (d >> low_bits) & 3U;
    if (local == 0b00 || local == 0b11) continue;
    const std::uint64_t high = d >> (low_bits + 2);
    const std::uint64_t low = d & ((std::uint64_t{1} << low_bits) - 1);
    const int e = -i - 2 * std::popcount(low);
    out.add((high << low_bits) | low, (local == 0b01 ? c : -c).shifted(e));
  }
  return out;
}

/// delta -> q^{-sum i delta_i} v_delta.
inline RepVector alpha(const KVector& v) {
  RepVector out(v.width);
  for (const auto& [d, c] : v.terms) out.add(d, c.shifted(-weighted_degree(d, v.width)));
  return out;
}

inline KVector alpha_inv(const RepVector& v) {
  KVector out(v.width);
  for (const auto& [d, c] : v.terms) out.add(d, c.shifted(weighted_degree(d, v.width)));
  return out;
}

inline RepVector apply_matrix(const LaurentMatrix& m, const RepVector& v, int width_out) {
  if (m.cols() != basis_size(v.width) || m.rows() != basis_size(width_out))
    throw std::invalid_argument("apply_matrix: shape mismatch");
  RepVector out(width_out);
  for (const auto& [k, c] : v.terms) {
    auto col = m.columns().find(k);
    if (col == m.columns().end()) continue;
    for (const auto& [r, a] : col->second) out.add(r, a * c);
  }
  return out;
}

/// Crossing of type `ctype` at position i on width n. Type 2 is built from
/// cap_op and cup_op; the other types are alpha^-1 psi alpha.
inline KVector crossing_op(int i, int n, int ctype, const KVector& v,
                           Type4Scalar t4 = Type4Scalar::kernel_shift) {
  detail::check_pair_index(i, n, "crossing_op");
  if (v.width != n) throw std::invalid_argument("crossing_op: input width must be n");
  if (ctype == 2) {
    KVector loop = cap_op(i, n, cup_op(i, n, v));
    return LaurentPoly::monomial(-1, -1) * (LaurentPoly::q(-1) * loop + v);
  }
  const LaurentMatrix m = psi_gen(Layer::crossing(i, ctype), n, t4);
  return alpha_inv(apply_matrix(m, alpha(v), n));
}

inline KVector apply_layer(const Layer& l, int width_in, const KVector& v,
                           Type4Scalar t4 = Type4Scalar::kernel_shift) {
  switch (l.kind) {
    case LayerKind::cap: return cap_op(l.position, width_in + 2, v);
    case LayerKind::cup: return cup_op(l.position, width_in, v);
    case LayerKind::crossing: return crossing_op(l.position, width_in, l.ctype, v, t4);
  }
  throw std::logic_error("unknown layer kind");
}

/// Layer-by-layer action of T on the K-group of its source width.
inline KVector apply(const TangleDiagram& t, const KVector& v, Type4Scalar t4 = Type4Scalar::kernel_shift) {
  if (v.width != t.source_width()) throw std::invalid_argument("apply: vector width differs from tangle source");
  KVector cur = v;
  int w = t.source_width();
  for (const Layer& l : t.layers()) {
    cur = apply_layer(l, w, cur, t4);
    w = l.width_after(w);
  }
  return cur;
}

/// The matrix of T in the delta basis.
inline LaurentMatrix operator_matrix(const TangleDiagram& t, Type4Scalar t4 = Type4Scalar::kernel_shift) {
  const std::size_t n_in = basis_size(t.source_width());
  LaurentMatrix m(basis_size(t.target_width()), n_in);
  for (std::uint64_t d = 0; d < n_in; ++d) {
    const KVector image = apply(t, KVector::basis(t.source_width(), d), t4);
    for (const auto& [r, c] : image.terms) m.set(r, d, c);
  }
  return m;
}

/// alpha as a diagonal matrix on width n.
inline LaurentMatrix alpha_matrix(int n) {
  LaurentMatrix m(basis_size(n), basis_size(n));
  for (std::uint64_t d = 0; d < basis_size(n); ++d) m.set(d, d, LaurentPoly::q(-weighted_degree(d, n)));
  return m;
}

/// alpha o [T] == psi(T) o alpha, as matrices.
inline bool intertwines(const TangleDiagram& t, Type4Scalar t4 = Type4Scalar::kernel_shift) {
  return alpha_matrix(t.target_width()) * operator_matrix(t, t4) == psi(t, t4) * alpha_matrix(t.source_width());
}

// ---------------------------------------------------------------------------
// Shift-scalar diagnostic

enum class ScalarAgreement { agree, sign_mismatch, differ };

inline const char* to_string(ScalarAgreement a) {
  switch (a) {
    case ScalarAgreement::agree: return "agree";
    case ScalarAgreement::sign_mismatch: return "sign mismatch";
    case ScalarAgreement::differ: return "differ";
  }
  return "?";
}

struct ShiftDiagnostic {
  int width = 0;
  int position = 0;
  int ctype = 0;
  ScalarAgreement agreement = ScalarAgreement::agree;
};

/// Compares the crossing operators of the K-group model with the scalars the
/// grading shifts predict: [T(1)] = [T(2)]^-1, [T(3)] = q^-3 [T(1)],
/// [T(4)] = q^3 [T(2)]. Type 2 itself is the reference and is not listed.
inline std::vector<ShiftDiagnostic> shift_diagnostic(int max_width, Type4Scalar t4) {
  std::vector<ShiftDiagnostic> out;
  for (int n = 2; n <= max_width; ++n) {
    for (int i = 1; i <= n - 1; ++i) {
      auto op = [&](int ctype) { return operator_matrix(TangleDiagram(n, n, {Layer::crossing(i, ctype)}), t4); };
      const LaurentMatrix k1 = op(1), k2 = op(2), k3 = op(3), k4 = op(4);
      const LaurentMatrix id = LaurentMatrix::identity(basis_size(n));
      auto compare = [](const LaurentMatrix& got, const LaurentMatrix& want) {
        if (got == want) return ScalarAgreement::agree;
        if (got == want.scaled(LaurentPoly(-1))) return ScalarAgreement::sign_mismatch;
        return ScalarAgreement::differ;
      };
      out.push_back({n, i, 1, compare(k1 * k2, id)});
      out.push_back({n, i, 3, compare(k3, k1.scaled(LaurentPoly::q(-3)))});
      out.push_back({n, i, 4, compare(k4, k2.scaled(LaurentPoly::q(3)))});
    }
  }
  return out;
}

}  // namespace qtangle
