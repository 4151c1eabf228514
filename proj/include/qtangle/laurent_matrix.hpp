#pragma once

// Sparse matrices over Z[q, q^-1].

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtangle/laurent.hpp"

namespace qtangle {

/// Column-major sparse matrix; no stored entry is zero.
class LaurentMatrix {
 public:
  using Column = std::map<std::size_t, LaurentPoly>;

  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static LaurentMatrix identity(std::size_t n) {
    LaurentMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.set(k, k, LaurentPoly(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Non-empty columns only.
  const std::map<std::size_t, Column>& columns() const { return data_; }

  LaurentPoly at(std::size_t r, std::size_t c) const {
    auto col = data_.find(c);
    if (col == data_.end()) return {};
    auto it = col->second.find(r);
    return it == col->second.end() ? LaurentPoly{} : it->second;
  }

  void set(std::size_t r, std::size_t c, LaurentPoly v) {
    check_index(r, c);
    if (v.is_zero()) {
      erase(r, c);
      return;
    }
    data_[c][r] = std::move(v);
  }

  void add(std::size_t r, std::size_t c, const LaurentPoly& v) {
    check_index(r, c);
    if (v.is_zero()) return;
    auto& col = data_[c];
    auto [it, inserted] = col.try_emplace(r, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) col.erase(it);
    }
    if (col.empty()) data_.erase(c);
  }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& [c, col] : data_) n += col.size();
    return n;
  }

  /// Matrix product: (*this) after `rhs`.
  LaurentMatrix operator*(const LaurentMatrix& rhs) const {
    if (cols_ != rhs.rows_)
      throw std::invalid_argument("matrix product: " + std::to_string(cols_) + " columns vs " +
                                  std::to_string(rhs.rows_) + " rows");
    LaurentMatrix out(rows_, rhs.cols_);
    for (const auto& [c, rcol] : rhs.data_) {
      Column acc;
      for (const auto& [k, b] : rcol) {
        auto lcol = data_.find(k);
        if (lcol == data_.end()) continue;
        for (const auto& [r, a] : lcol->second) {
          auto [it, inserted] = acc.try_emplace(r, a * b);
          if (!inserted) it->second += a * b;
        }
      }
      std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
      if (!acc.empty()) out.data_.emplace(c, std::move(acc));
    }
    return out;
  }

  LaurentMatrix scaled(const LaurentPoly& s) const {
    LaurentMatrix out(rows_, cols_);
    if (s.is_zero()) return out;
    for (const auto& [c, col] : data_)
      for (const auto& [r, v] : col) out.data_[c][r] = v * s;
    return out;
  }

  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    LaurentMatrix out = a;
    for (const auto& [c, col] : b.data_)
      for (const auto& [r, v] : col) out.add(r, c, v);
    return out;
  }

  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  }
  void erase(std::size_t r, std::size_t c) {
    auto col = data_.find(c);
    if (col == data_.end()) return;
    col->second.erase(r);
    if (col->second.empty()) data_.erase(col);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<std::size_t, Column> data_;
};

}  // namespace qtangle
