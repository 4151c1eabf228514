#pragma once

// Bigraded chain complexes with integer differentials and their homology over Q.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtangle/laurent.hpp"
#include "qtangle/linalg.hpp"

namespace qtangle {

using Bidegree = std::pair<int, int>;  // (i, j)

/// (i, j) -> dimension; zero dimensions are never stored.
class BigradedDims {
 public:
  BigradedDims() = default;
  BigradedDims(std::initializer_list<std::pair<const Bidegree, std::size_t>> init) {
    for (const auto& [k, v] : init) add(k.first, k.second, v);
  }

  std::size_t at(int i, int j) const {
    auto it = d_.find({i, j});
    return it == d_.end() ? 0 : it->second;
  }
  void add(int i, int j, std::size_t n) {
    if (n != 0) d_[{i, j}] += n;
  }
  bool empty() const { return d_.empty(); }
  const std::map<Bidegree, std::size_t>& entries() const { return d_; }

  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& [k, v] : d_) n += v;
    return n;
  }

  /// The entry at (i, j) moves to (i + di, j + dj).
  BigradedDims shifted(int di, int dj) const {
    BigradedDims out;
    for (const auto& [k, v] : d_) out.add(k.first + di, k.second + dj, v);
    return out;
  }

  friend bool operator==(const BigradedDims&, const BigradedDims&) = default;

 private:
  std::map<Bidegree, std::size_t> d_;
};

/// sum (-1)^i q^j dim^{i,j}.
inline LaurentPoly euler_characteristic(const BigradedDims& d) {
  LaurentPoly out;
  for (const auto& [k, v] : d.entries())
    out.add_term((k.first % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(v), k.second);
  return out;
}

/// A finitely generated bigraded complex over Z with differential of bidegree (1, 0).
class ChainComplex {
 public:
  using Gen = std::size_t;

  Gen add_generator(int i, int j) {
    const Gen g = degree_.size();
    degree_.push_back({i, j});
    auto& grp = groups_[{i, j}];
    local_.push_back(grp.size());
    grp.push_back(g);
    d_.emplace_back();
    return g;
  }

  /// d(src) += c * tgt
  void add_to_differential(Gen src, Gen tgt, std::int64_t c) {
    if (src >= size() || tgt >= size()) throw std::out_of_range("generator out of range");
    if (c == 0) return;
    auto [it, inserted] = d_[src].try_emplace(tgt, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) d_[src].erase(it);
    }
  }

  std::size_t size() const { return degree_.size(); }
  Bidegree degree(Gen g) const { return degree_[g]; }
  std::size_t local_index(Gen g) const { return local_[g]; }
  const std::map<Gen, std::int64_t>& differential(Gen g) const { return d_[g]; }
  const std::map<Bidegree, std::vector<Gen>>& groups() const { return groups_; }

  const std::vector<Gen>& group(int i, int j) const {
    static const std::vector<Gen> none;
    auto it = groups_.find({i, j});
    return it == groups_.end() ? none : it->second;
  }

  /// Every differential entry goes from (i, j) to (i + 1, j).
  bool has_unit_bidegree() const {
    for (Gen g = 0; g < size(); ++g)
      for (const auto& [t, c] : d_[g])
        if (degree_[t] != Bidegree{degree_[g].first + 1, degree_[g].second}) return false;
    return true;
  }

  bool d_squared_zero() const {
    for (Gen g = 0; g < size(); ++g) {
      std::map<Gen, std::int64_t> acc;
      for (const auto& [t, c] : d_[g])
        for (const auto& [u, e] : d_[t]) acc[u] = detail::checked_add(acc[u], detail::checked_mul(c, e));
      for (const auto& [u, v] : acc)
        if (v != 0) return false;
    }
    return true;
  }

  /// The block C^{i,j} -> C^{i+1,j} as rows indexed by target local index,
  /// columns by source local index.
  std::vector<SparseRow<std::int64_t>> block_rows(int i, int j) const {
    std::vector<SparseRow<std::int64_t>> rows(group(i + 1, j).size());
    for (Gen g : group(i, j))
      for (const auto& [t, c] : d_[g]) rows[local_[t]].emplace_back(local_[g], c);
    return rows;  // columns appended in increasing source order, so rows are sorted
  }

  /// The images d(g) for g in C^{i,j}, as vectors in local coordinates of C^{i+1,j}.
  std::vector<SparseRow<std::int64_t>> block_columns(int i, int j) const {
    std::vector<SparseRow<std::int64_t>> cols;
    for (Gen g : group(i, j)) {
      SparseRow<std::int64_t> v;
      for (const auto& [t, c] : d_[g]) v.emplace_back(local_[t], c);
      std::sort(v.begin(), v.end());
      cols.push_back(std::move(v));
    }
    return cols;
  }

  std::size_t block_rank(int i, int j) const {
    if (group(i, j).empty() || group(i + 1, j).empty()) return 0;
    return rank(block_columns(i, j));
  }

  BigradedDims homology() const {
    BigradedDims out;
    std::map<Bidegree, std::size_t> ranks;
    auto rank_at = [&](int i, int j) {
      auto [it, inserted] = ranks.try_emplace({i, j}, 0);
      if (inserted) it->second = block_rank(i, j);
      return it->second;
    };
    for (const auto& [deg, gens] : groups_) {
      const auto [i, j] = deg;
      const std::size_t outgoing = rank_at(i, j);
      const std::size_t incoming = rank_at(i - 1, j);
      out.add(i, j, gens.size() - outgoing - incoming);
    }
    return out;
  }

  /// The span of the generators satisfying `keep`, which must be closed under d.
  /// `old_of_new` receives the inclusion.
  ChainComplex subcomplex(const std::function<bool(Gen)>& keep, std::vector<Gen>* old_of_new = nullptr) const {
    ChainComplex sub;
    std::vector<Gen> new_of_old(size(), static_cast<Gen>(-1));
    std::vector<Gen> inclusion;
    for (Gen g = 0; g < size(); ++g) {
      if (!keep(g)) continue;
      new_of_old[g] = sub.add_generator(degree_[g].first, degree_[g].second);
      inclusion.push_back(g);
    }
    for (Gen g = 0; g < size(); ++g) {
      if (new_of_old[g] == static_cast<Gen>(-1)) continue;
      for (const auto& [t, c] : d_[g]) {
        if (new_of_old[t] == static_cast<Gen>(-1))
          throw std::logic_error("subcomplex is not closed under the differential");
        sub.add_to_differential(new_of_old[g], new_of_old[t], c);
      }
    }
    if (old_of_new) *old_of_new = std::move(inclusion);
    return sub;
  }

  /// The quotient by the complement of `keep` (the span of the kept generators
  /// with the differential projected onto them).
  ChainComplex quotient(const std::function<bool(Gen)>& keep, std::vector<Gen>* old_of_new = nullptr) const {
    ChainComplex q;
    std::vector<Gen> new_of_old(size(), static_cast<Gen>(-1));
    std::vector<Gen> projection;
    for (Gen g = 0; g < size(); ++g) {
      if (!keep(g)) continue;
      new_of_old[g] = q.add_generator(degree_[g].first, degree_[g].second);
      projection.push_back(g);
    }
    for (Gen g = 0; g < size(); ++g) {
      if (new_of_old[g] == static_cast<Gen>(-1)) continue;
      for (const auto& [t, c] : d_[g])
        if (new_of_old[t] != static_cast<Gen>(-1)) q.add_to_differential(new_of_old[g], new_of_old[t], c);
    }
    if (old_of_new) *old_of_new = std::move(projection);
    return q;
  }

 private:
  std::vector<Bidegree> degree_;
  std::vector<std::size_t> local_;
  std::vector<std::map<Gen, std::int64_t>> d_;
  std::map<Bidegree, std::vector<Gen>> groups_;
};

}  // namespace qtangle
