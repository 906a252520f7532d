#pragma once

// Binary linear codes built from monomial sets, polar information sets over
// the Kronecker kernel T_2^{(x)n}, and the named code families.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polarauto/error.hpp"
#include "polarauto/eval_vector.hpp"
#include "polarauto/gf2.hpp"
#include "polarauto/monomial.hpp"

namespace polarauto {

/// Linear code of length 2^n given by generator vectors, with an RREF
/// basis cached for membership queries. Immutable.
class BinaryCode {
 public:
  BinaryCode() = default;

  static BinaryCode from_generators(int n, std::vector<EvalVector> generators) {
    BinaryCode c;
    c.n_ = n;
    c.space_ = RowSpace(n);
    for (const auto& g : generators) {
      require(g.num_vars() == n, "generator length does not match 2^n");
      c.space_.insert(g);
    }
    c.generators_ = std::move(generators);
    return c;
  }

  /// Generators are the member evaluations in canonical monomial order.
  static BinaryCode from_monomials(const MonomialSet& s) {
    require(!s.empty(), "a monomial code needs at least one monomial");
    std::vector<EvalVector> gens;
    for (const auto& m : s) gens.push_back(evaluate(m));
    BinaryCode c = from_generators(s.num_vars(), std::move(gens));
    c.monomials_ = s;
    return c;
  }

  int num_vars() const { return n_; }
  std::size_t length() const { return std::size_t{1} << n_; }
  std::size_t dim() const { return space_.rank(); }
  const std::vector<EvalVector>& generators() const { return generators_; }
  const std::optional<MonomialSet>& monomials() const { return monomials_; }
  const RowSpace& space() const { return space_; }

  bool contains(const EvalVector& v) const {
    require(v.num_vars() == n_, "vector length does not match the code length");
    return space_.contains(v);
  }

  /// Same row space, regardless of generator choice.
  bool same_space(const BinaryCode& o) const {
    if (n_ != o.n_ || dim() != o.dim()) return false;
    for (const auto& r : o.space_.rows())
      if (!contains(r)) return false;
    return true;
  }

  bool is_subcode_of(const BinaryCode& o) const {
    if (n_ != o.n_) return false;
    for (const auto& r : space_.rows())
      if (!o.contains(r)) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<EvalVector> generators_;
  std::optional<MonomialSet> monomials_;
  RowSpace space_;
};

/// Information and frozen row indices of T_N.
class PolarSpec {
 public:
  PolarSpec(int n, std::set<std::uint32_t> info_set) : n_(n), info_(std::move(info_set)) {
    require(n >= 0 && n <= kMaxVars, "variable count must be in [0, 20]");
    for (auto i : info_) require(i < (1u << n), "information index out of range");
  }

  int num_vars() const { return n_; }
  const std::set<std::uint32_t>& info_set() const { return info_; }

  std::set<std::uint32_t> frozen_set() const {
    std::set<std::uint32_t> f;
    for (std::uint32_t i = 0; i < (1u << n_); ++i)
      if (!info_.count(i)) f.insert(i);
    return f;
  }

 private:
  int n_;
  std::set<std::uint32_t> info_;
};

/// Row i of T_2^{(x)n} is the evaluation of the product of x_j over the
/// zero bits j of i.
inline Monomial kernel_row_monomial(std::uint32_t i, int n) {
  require(n >= 0 && n <= kMaxVars, "variable count must be in [0, 20]");
  require(i < (1u << n), "kernel row index out of range");
  return Monomial(n, ~i & ((1u << n) - 1));
}

inline BinaryCode code_from_monomials(const MonomialSet& s) {
  return BinaryCode::from_monomials(s);
}

inline BinaryCode code_from_information_set(const PolarSpec& spec) {
  require(!spec.info_set().empty(), "information set is empty");
  MonomialSet s(spec.num_vars());
  for (auto i : spec.info_set()) s.insert(kernel_row_monomial(i, spec.num_vars()));
  return BinaryCode::from_monomials(s);
}

/// Monomials of degree <= r.
inline MonomialSet rm_monomials(int r, int n) {
  require(n >= 0 && n <= kMaxVars, "variable count must be in [0, 20]");
  require(r >= 0 && r <= n, "rm(r,n) needs 0 <= r <= n");
  MonomialSet s(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) <= r) s.insert(Monomial(n, mask));
  return s;
}

inline BinaryCode rm_code(int r, int n) { return BinaryCode::from_monomials(rm_monomials(r, n)); }

/// rm(r,n) plus the single monomial x_0 x_1 ... x_r.
inline BinaryCode rm_plus_code(int r, int n) {
  require(r >= 1 && r <= n - 1, "rm_plus(r,n) needs 1 <= r <= n-1");
  MonomialSet s = rm_monomials(r, n);
  s.insert(Monomial(n, (1u << (r + 1)) - 1));
  return BinaryCode::from_monomials(s);
}

struct Family3Result {
  BinaryCode code;
  // The closure added no degree >= 2 monomial to S. Lower-degree members
  // are always part of the code, so they do not count.
  bool s_was_decreasing = false;
};

/// {1, x_0..x_{m-1}} together with the degree >= 2 part of the decreasing
/// closure of S, where S lives on x_0..x_{k-1} and contains x_0 x_{k-1}.
inline Family3Result family3_code(int m, int k, const MonomialSet& s) {
  require(k >= 2 && k < m, "family3 needs 2 <= k < m");
  require(s.num_vars() == m, "S must be written in m variables");
  for (const auto& g : s) {
    require(g.degree() >= 2, "S may only contain monomials of degree >= 2");
    require((g.mask() >> k) == 0, "S may only use x_0..x_{k-1}");
  }
  require(s.contains(Monomial(m, 1u | (1u << (k - 1)))), "S must contain x_0 x_{k-1}");
  auto closure = decreasing_closure(s).closure;
  MonomialSet gen(m);
  gen.insert(Monomial::one(m));
  for (int i = 0; i < m; ++i) gen.insert(Monomial(m, 1u << i));
  bool closed = true;
  for (const auto& f : closure)
    if (f.degree() >= 2) {
      gen.insert(f);
      closed = closed && s.contains(f);
    }
  return {BinaryCode::from_monomials(gen), closed};
}

enum class PresetKind { rm, rm_plus, family3 };

struct PresetParams {
  PresetKind kind = PresetKind::rm;
  int r = 0;
  int n = 0;  // rm, rm_plus
  int m = 0;  // family3
  int k = 0;  // family3
  std::optional<MonomialSet> s;  // family3
};

inline BinaryCode build_preset(const PresetParams& p) {
  switch (p.kind) {
    case PresetKind::rm:
      return rm_code(p.r, p.n);
    case PresetKind::rm_plus:
      return rm_plus_code(p.r, p.n);
    case PresetKind::family3:
      require(p.s.has_value(), "family3 needs S");
      return family3_code(p.m, p.k, *p.s).code;
  }
  throw Error("unknown preset kind");
}

/// Same generating monomials evaluated over n > m variables; every generator
/// becomes 2^{n-m} copies of the base generator.
inline BinaryCode lift_code(const BinaryCode& base, int n) {
  require(base.monomials().has_value(), "lifting needs monomial provenance");
  const int m = base.num_vars();
  require(n > m && n <= kMaxVars, "lift target must have more variables than the base");
  MonomialSet s(n);
  for (const auto& f : *base.monomials()) s.insert(Monomial(n, f.mask()));
  return BinaryCode::from_monomials(s);
}

/// Codeword count per Hamming weight, by Gray-code walk over the RREF basis.
inline std::map<std::size_t, std::uint64_t> weight_enumerator(const BinaryCode& c) {
  const std::size_t k = c.dim();
  require(k <= 24, "weight enumeration needs dim <= 24");
  std::map<std::size_t, std::uint64_t> counts;
  EvalVector word(c.num_vars());
  counts[0] = 1;
  const auto rows = c.space().rows();
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << k); ++step) {
    word ^= rows[std::countr_zero(step)];
    ++counts[word.weight()];
  }
  return counts;
}

}  // namespace polarauto
