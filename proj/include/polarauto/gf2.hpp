#pragma once

// Row spaces over F2 kept in reduced row-echelon form.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polarauto/error.hpp"
#include "polarauto/eval_vector.hpp"

namespace polarauto {

/// Reduced row-echelon basis of a subspace of F2^{2^n}. The pivot of a row
/// is its first set coordinate; no other row has a 1 in that column.
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(int n) : n_(n) {}

  int num_vars() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  std::span<const EvalVector> rows() const { return rows_; }
  std::span<const std::size_t> pivots() const { return pivots_; }

  /// Adds v to the span. Returns false if v was already in it.
  bool insert(EvalVector v) {
    require(v.num_vars() == n_, "vector length does not match the row space");
    reduce_in_place(v);
    if (v.is_zero()) return false;
    std::size_t p = v.first_set();
    for (auto& row : rows_)
      if (row.test(p)) row ^= v;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto at = it - pivots_.begin();
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
  }

  void reduce_in_place(EvalVector& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (v.test(pivots_[i])) v ^= rows_[i];
  }

  EvalVector reduce(EvalVector v) const {
    reduce_in_place(v);
    return v;
  }

  bool contains(const EvalVector& v) const {
    require(v.num_vars() == n_, "vector length does not match the row space");
    return reduce(v).is_zero();
  }

 private:
  int n_ = 0;
  std::vector<EvalVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// The same structure for vectors that fit in one machine word (length <= 64).
/// Used by the search kernels.
class WordSpace {
 public:
  bool insert(std::uint64_t v) {
    v = reduce(v);
    if (!v) return false;
    const std::uint64_t pivot = v & -v;
    for (auto& r : rows_)
      if (r & pivot) r ^= v;
    rows_.push_back(v);
    pivots_.push_back(pivot);
    return true;
  }

  std::uint64_t reduce(std::uint64_t v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (v & pivots_[i]) v ^= rows_[i];
    return v;
  }

  bool contains(std::uint64_t v) const { return reduce(v) == 0; }
  std::size_t rank() const { return rows_.size(); }
  std::span<const std::uint64_t> rows() const { return rows_; }

 private:
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> pivots_;
};

/// Rank of a set of words over F2.
inline std::size_t word_rank(std::span<const std::uint64_t> vs) {
  WordSpace s;
  for (auto v : vs) s.insert(v);
  return s.rank();
}

/// Basis of the orthogonal complement of span(rows) inside F2^length.
inline std::vector<std::uint64_t> dual_basis(std::span<const std::uint64_t> rows,
                                             int length) {
  require(length >= 1 && length <= 64, "dual_basis needs length <= 64");
  WordSpace s;
  for (auto r : rows) s.insert(r);
  std::uint64_t pivot_mask = 0;
  std::vector<std::uint64_t> red(s.rows().begin(), s.rows().end());
  std::vector<int> piv;
  for (auto r : red) {
    int p = std::countr_zero(r);
    piv.push_back(p);
    pivot_mask |= std::uint64_t{1} << p;
  }
  // Each free column f gives the dual vector e_f + sum of e_{pivot(r)} over
  // rows r having a 1 at f.
  std::vector<std::uint64_t> out;
  for (int f = 0; f < length; ++f) {
    if ((pivot_mask >> f) & 1) continue;
    std::uint64_t d = std::uint64_t{1} << f;
    for (std::size_t i = 0; i < red.size(); ++i)
      if ((red[i] >> f) & 1) d |= std::uint64_t{1} << piv[i];
    out.push_back(d);
  }
  return out;
}

}  // namespace polarauto
