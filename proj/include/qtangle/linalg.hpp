#pragma once

// Exact rank and kernel computations over Q for sparse integer matrices, by
// fraction-free elimination. Every routine is templated on the integer type;
// with_int_fallback() runs a computation in checked int64 arithmetic and
// repeats it with arbitrary-precision integers if an overflow is detected.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtangle {

using BigInt = boost::multiprecision::cpp_int;

/// A sparse vector: (index, nonzero value) pairs sorted by index.
template <class Int>
using SparseRow = std::vector<std::pair<std::size_t, Int>>;

namespace detail {

inline std::int64_t lin_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out) || out == std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("int64 elimination overflow");
  return out;
}
inline std::int64_t lin_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out) || out == std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("int64 elimination overflow");
  return out;
}
inline std::int64_t lin_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out) || out == std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("int64 elimination overflow");
  return out;
}
inline std::int64_t lin_gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline std::int64_t lin_abs(std::int64_t a) { return a < 0 ? -a : a; }

inline BigInt lin_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt lin_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt lin_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt lin_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lin_abs(const BigInt& a) { return abs(a); }

/// a*x - b*y, merged by index.
template <class Int>
SparseRow<Int> combine(const Int& a, const SparseRow<Int>& x, const Int& b, const SparseRow<Int>& y) {
  SparseRow<Int> out;
  out.reserve(x.size() + y.size());
  auto ix = x.begin();
  auto iy = y.begin();
  while (ix != x.end() || iy != y.end()) {
    if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
      out.emplace_back(ix->first, lin_mul(a, ix->second));
      ++ix;
    } else if (ix == x.end() || iy->first < ix->first) {
      out.emplace_back(iy->first, lin_sub(Int(0), lin_mul(b, iy->second)));
      ++iy;
    } else {
      Int v = lin_sub(lin_mul(a, ix->second), lin_mul(b, iy->second));
      if (v != 0) out.emplace_back(ix->first, std::move(v));
      ++ix;
      ++iy;
    }
  }
  return out;
}

/// Divides by the content and makes the leading entry positive.
template <class Int>
void normalize(SparseRow<Int>& r) {
  if (r.empty()) return;
  Int g = 0;
  for (const auto& [c, v] : r) {
    g = lin_gcd(g, lin_abs(v));
    if (g == 1) break;
  }
  if (r.front().second < 0) g = lin_sub(Int(0), g);
  if (g != 1)
    for (auto& [c, v] : r) v /= g;
}

}  // namespace detail

/// Row echelon form with pairwise distinct leading columns, built incrementally.
template <class Int>
class Echelon {
 public:
  /// Reduces `row` against the current pivots; keeps it if it is independent.
  /// Returns true when the rank grew.
  bool insert(SparseRow<Int> row) {
    detail::normalize(row);
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        pivots_.emplace(row.front().first, std::move(row));
        return true;
      }
      const SparseRow<Int>& p = it->second;
      const Int a = p.front().second;
      const Int b = row.front().second;
      const Int g = detail::lin_gcd(detail::lin_abs(a), detail::lin_abs(b));
      row = detail::combine<Int>(a / g, row, b / g, p);
      detail::normalize(row);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

  /// Reduced form: each pivot column is zero outside its own row.
  void reduce() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      SparseRow<Int>& row = it->second;
      for (std::size_t k = 1; k < row.size(); ++k) {
        auto p = pivots_.find(row[k].first);
        if (p == pivots_.end()) continue;
        const Int a = p->second.front().second;
        const Int b = row[k].second;
        const Int g = detail::lin_gcd(detail::lin_abs(a), detail::lin_abs(b));
        row = detail::combine<Int>(a / g, row, b / g, p->second);
        detail::normalize(row);
        k = 0;  // restart: entries shifted
      }
    }
  }

  const std::map<std::size_t, SparseRow<Int>>& pivots() const { return pivots_; }

 private:
  std::map<std::size_t, SparseRow<Int>> pivots_;
};

/// Rank of the span of `rows`.
template <class Int, class SrcInt>
std::size_t rank_of(const std::vector<SparseRow<SrcInt>>& rows) {
  Echelon<Int> e;
  for (const auto& r : rows) {
    SparseRow<Int> conv;
    conv.reserve(r.size());
    for (const auto& [c, v] : r) conv.emplace_back(c, Int(v));
    e.insert(std::move(conv));
  }
  return e.rank();
}

/// Integer basis of {x in Q^cols : A x = 0}, A given by its rows.
template <class Int, class SrcInt>
std::vector<SparseRow<Int>> kernel_basis(const std::vector<SparseRow<SrcInt>>& rows, std::size_t cols) {
  Echelon<Int> e;
  for (const auto& r : rows) {
    SparseRow<Int> conv;
    for (const auto& [c, v] : r) {
      if (c >= cols) throw std::out_of_range("kernel_basis: column out of range");
      conv.emplace_back(c, Int(v));
    }
    e.insert(std::move(conv));
  }
  e.reduce();

  // Column f -> pivot rows with a nonzero entry there.
  std::map<std::size_t, std::vector<std::pair<std::size_t, Int>>> uses;  // f -> (pivot col, entry)
  for (const auto& [pc, row] : e.pivots())
    for (std::size_t k = 1; k < row.size(); ++k) uses[row[k].first].emplace_back(pc, row[k].second);

  std::vector<SparseRow<Int>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (e.pivots().count(f)) continue;
    auto u = uses.find(f);
    if (u == uses.end()) {
      out.push_back({{f, Int(1)}});
      continue;
    }
    Int l = 1;
    for (const auto& [pc, b] : u->second) {
      const Int a = e.pivots().at(pc).front().second;
      l = detail::lin_mul(l / detail::lin_gcd(l, a), a);
    }
    SparseRow<Int> x;
    x.emplace_back(f, l);
    for (const auto& [pc, b] : u->second) {
      const Int a = e.pivots().at(pc).front().second;
      x.emplace_back(pc, detail::lin_sub(Int(0), detail::lin_mul(b, l / a)));
    }
    std::sort(x.begin(), x.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    detail::normalize(x);
    out.push_back(std::move(x));
  }
  return out;
}

/// Runs `f.template operator()<Int>()` with Int = int64_t, and again with
/// BigInt if the first attempt overflowed.
template <class F>
auto with_int_fallback(F&& f) {
  try {
    return f.template operator()<std::int64_t>();
  } catch (const std::overflow_error&) {
    return f.template operator()<BigInt>();
  }
}

/// Rank over Q of an int64 matrix given by rows.
inline std::size_t rank(const std::vector<SparseRow<std::int64_t>>& rows) {
  return with_int_fallback([&]<class Int>() { return rank_of<Int>(rows); });
}

}  // namespace qtangle
