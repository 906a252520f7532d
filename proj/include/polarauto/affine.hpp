#pragma once

// Affine maps x -> Ax + b on F2^n, their coordinate permutations, and the
// enumeration of affine automorphisms of a code.

#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "polarauto/code.hpp"
#include "polarauto/error.hpp"
#include "polarauto/gf2.hpp"
#include "polarauto/monomial.hpp"
#include "polarauto/permutation.hpp"
#include "polarauto/stabilizer_chain.hpp"

namespace polarauto {

/// Point at 0-based coordinate p, as a bitmask with bit i = x_i.
inline std::uint32_t point_of_coordinate(std::uint32_t p, int n) {
  return ~p & ((1u << n) - 1);
}

/// Inverse of point_of_coordinate (the map is an involution).
inline std::uint32_t coordinate_of_point(std::uint32_t x, int n) {
  return ~x & ((1u << n) - 1);
}

/// x'_i = sum_j A[i][j] x_j + b_i. Row i of A is rows[i] (bit j = A[i][j]).
struct AffineMap {
  int n = 0;
  std::vector<std::uint32_t> rows;
  std::uint32_t b = 0;

  static AffineMap identity(int n) {
    AffineMap f;
    f.n = n;
    for (int i = 0; i < n; ++i) f.rows.push_back(1u << i);
    return f;
  }

  /// x_target -> x_target + x_source.
  static AffineMap transvection(int n, int target, int source) {
    require(target != source, "transvection needs two distinct variables");
    AffineMap f = identity(n);
    f.rows.at(target) |= 1u << source;
    return f;
  }

  /// x_target -> x_target + 1.
  static AffineMap translation(int n, int target) {
    AffineMap f = identity(n);
    require(target >= 0 && target < n, "translation variable out of range");
    f.b = 1u << target;
    return f;
  }

  bool bit(int i, int j) const { return (rows[i] >> j) & 1u; }

  bool invertible() const {
    std::vector<std::uint64_t> r(rows.begin(), rows.end());
    return word_rank(r) == static_cast<std::size_t>(n);
  }

  std::uint32_t apply(std::uint32_t x) const {
    std::uint32_t y = b;
    for (int i = 0; i < n; ++i) y ^= static_cast<std::uint32_t>(std::popcount(rows[i] & x) & 1) << i;
    return y;
  }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// (f2 o f1)(x) = f2(f1(x)) = (A2 A1) x + A2 b1 + b2.
inline AffineMap compose(const AffineMap& f2, const AffineMap& f1) {
  require(f1.n == f2.n, "affine maps act on different dimensions");
  AffineMap out;
  out.n = f1.n;
  out.rows.assign(f1.n, 0);
  for (int i = 0; i < f1.n; ++i)
    for (int k = 0; k < f1.n; ++k)
      if (f2.bit(i, k)) out.rows[i] ^= f1.rows[k];
  out.b = f2.apply(f1.b);
  return out;
}

inline AffineMap inverse(const AffineMap& f) {
  require(f.invertible(), "affine map is singular");
  const int n = f.n;
  // Gauss-Jordan on [A | I].
  std::vector<std::uint32_t> a(f.rows), inv(n);
  for (int i = 0; i < n; ++i) inv[i] = 1u << i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (!((a[piv] >> col) & 1u)) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    for (int r = 0; r < n; ++r)
      if (r != col && ((a[r] >> col) & 1u)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
  }
  AffineMap g;
  g.n = n;
  g.rows = inv;
  g.b = 0;
  g.b = g.apply(f.b);  // A^{-1} b; the translation is its own negative over F2
  return g;
}

/// (n+1)x(n+1) block matrix [[1, 0], [b, A]].
class AffinePresentation {
 public:
  explicit AffinePresentation(const AffineMap& f) : n_(f.n) {
    bits_.assign(static_cast<std::size_t>((n_ + 1) * (n_ + 1)), 0);
    at(0, 0) = 1;
    for (int i = 0; i < n_; ++i) {
      at(i + 1, 0) = (f.b >> i) & 1u;
      for (int j = 0; j < n_; ++j) at(i + 1, j + 1) = f.bit(i, j);
    }
  }

  /// Reads a matrix; checks the first row is (1, 0, ..., 0) and A invertible.
  static AffinePresentation from_rows(const std::vector<std::vector<int>>& rows) {
    const int size = static_cast<int>(rows.size());
    require(size >= 2, "presentation needs at least 2 rows");
    AffineMap f;
    f.n = size - 1;
    for (const auto& r : rows) require(static_cast<int>(r.size()) == size, "presentation must be square");
    require(rows[0][0] == 1, "presentation first row must be (1, 0, ..., 0)");
    for (int j = 1; j < size; ++j) require(rows[0][j] == 0, "presentation first row must be (1, 0, ..., 0)");
    f.rows.assign(f.n, 0);
    for (int i = 0; i < f.n; ++i) {
      if (rows[i + 1][0]) f.b |= 1u << i;
      for (int j = 0; j < f.n; ++j)
        if (rows[i + 1][j + 1]) f.rows[i] |= 1u << j;
    }
    require(f.invertible(), "presentation block A is singular");
    return AffinePresentation(f);
  }

  int dim() const { return n_ + 1; }
  int operator()(int r, int c) const { return bits_[static_cast<std::size_t>(r * (n_ + 1) + c)]; }

  AffineMap map() const {
    AffineMap f;
    f.n = n_;
    f.rows.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
      if ((*this)(i + 1, 0)) f.b |= 1u << i;
      for (int j = 0; j < n_; ++j)
        if ((*this)(i + 1, j + 1)) f.rows[i] |= 1u << j;
    }
    return f;
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(n_ + 1, std::vector<int>(n_ + 1));
    for (int r = 0; r <= n_; ++r)
      for (int c = 0; c <= n_; ++c) out[r][c] = (*this)(r, c);
    return out;
  }

  /// Rows as bit strings, e.g. "1010".
  std::vector<std::string> row_strings() const {
    std::vector<std::string> out;
    for (int r = 0; r <= n_; ++r) {
      std::string s;
      for (int c = 0; c <= n_; ++c) s += (*this)(r, c) ? '1' : '0';
      out.push_back(s);
    }
    return out;
  }

  friend bool operator==(const AffinePresentation&, const AffinePresentation&) = default;

 private:
  int& at(int r, int c) { return bits_[static_cast<std::size_t>(r * (n_ + 1) + c)]; }

  int n_;
  std::vector<int> bits_;
};

/// p(j) = coordinate of A * point(j) + b. Group homomorphism from the affine
/// group (under compose) into permutations (under compose).
inline Permutation affine_to_permutation(const AffineMap& f) {
  require(f.n >= 0 && f.n <= kMaxVars && static_cast<int>(f.rows.size()) == f.n,
          "malformed affine map");
  require(f.invertible(), "affine map is singular");
  const std::uint32_t size = 1u << f.n;
  std::vector<std::uint32_t> img(size);
  for (std::uint32_t p = 0; p < size; ++p)
    img[p] = coordinate_of_point(f.apply(point_of_coordinate(p, f.n)), f.n);
  return Permutation::from_images_unchecked(std::move(img));
}

struct AffineEnumResult {
  BigInt count = 0;
  std::vector<Permutation> generators;
};

namespace detail {

/// Greedy generator reduction: keep an element only when the group generated
/// by the kept ones does not already contain it.
class GeneratorReducer {
 public:
  explicit GeneratorReducer(std::size_t degree) : degree_(degree) {}

  bool offer(const Permutation& p) {
    if (p.is_identity()) return false;
    if (!kept_.empty() && chain_.contains(p)) return false;
    kept_.push_back(p);
    chain_ = StabilizerChain::build(kept_, degree_);
    return true;
  }

  const std::vector<Permutation>& kept() const { return kept_; }
  std::vector<Permutation> take() { return std::move(kept_); }
  BigInt order() const { return kept_.empty() ? BigInt(1) : chain_.order(); }

 private:
  std::size_t degree_;
  std::vector<Permutation> kept_;
  StabilizerChain chain_;
};

class AffineSearch {
 public:
  explicit AffineSearch(const BinaryCode& c) : n_(c.num_vars()), size_(1u << n_) {
    for (const auto& r : c.space().rows()) space_.insert(r.word());
    full_ = size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1;
    lin_eval_.assign(size_, 0);
    for (std::uint32_t r = 1; r < size_; ++r) {
      int j = std::countr_zero(r);
      lin_eval_[r] = lin_eval_[r & (r - 1)] ^ evaluate(Monomial(n_, 1u << j)).word();
    }
    checks_.resize(n_);
    for (const auto& g : c.generators()) {
      MonomialSet anf = eval_to_anf(g);
      std::vector<std::uint32_t> masks;
      std::uint32_t all = 0;
      for (const auto& m : anf) {
        masks.push_back(m.mask());
        all |= m.mask();
      }
      if (all == 0) {
        // Constant functions are fixed by every permutation.
        constants_ok_ = constants_ok_ && space_.contains(g.word());
        continue;
      }
      checks_[31 - std::countl_zero(all)].push_back(std::move(masks));
    }
  }

  std::size_t unit_count() const { return 2 * (size_ - 1); }

  /// Runs the subtree where row 0 and b_0 are fixed by the unit index.
  void run_unit(std::size_t unit, std::uint64_t& count, GeneratorReducer& reducer) {
    if (!constants_ok_) return;
    const std::uint32_t r0 = static_cast<std::uint32_t>(unit / 2 + 1);
    const std::uint32_t b0 = static_cast<std::uint32_t>(unit % 2);
    rows_.assign(n_, 0);
    forms_.assign(n_, 0);
    b_ = 0;
    std::uint64_t span = 1;  // vectors in the span of chosen rows, as a bitset
    place(0, r0, b0, span, count, reducer);
  }

 private:
  void place(int i, std::uint32_t r, std::uint32_t bi, std::uint64_t span, std::uint64_t& count,
             GeneratorReducer& reducer) {
    rows_[i] = r;
    forms_[i] = lin_eval_[r] ^ (bi ? full_ : 0);
    b_ = (b_ & ~(1u << i)) | (bi << i);
    if (!checks_pass(i)) return;
    std::uint64_t grown = span;
    for (std::uint64_t s = span; s; s &= s - 1) grown |= std::uint64_t{1} << (std::countr_zero(s) ^ r);
    if (i + 1 == n_) {
      ++count;
      AffineMap f;
      f.n = n_;
      f.rows = rows_;
      f.b = b_;
      reducer.offer(affine_to_permutation(f));
      return;
    }
    for (std::uint32_t next = 1; next < size_; ++next) {
      if ((grown >> next) & 1u) continue;
      place(i + 1, next, 0, grown, count, reducer);
      place(i + 1, next, 1, grown, count, reducer);
    }
  }

  bool checks_pass(int i) const {
    for (const auto& anf : checks_[i]) {
      std::uint64_t image = 0;
      for (std::uint32_t mask : anf) {
        std::uint64_t term = full_;
        for (std::uint32_t s = mask; s; s &= s - 1) term &= forms_[std::countr_zero(s)];
        image ^= term;
      }
      if (!space_.contains(image)) return false;
    }
    return true;
  }

  int n_;
  std::uint32_t size_;
  std::uint64_t full_ = 0;
  WordSpace space_;
  bool constants_ok_ = true;
  std::vector<std::uint64_t> lin_eval_;
  std::vector<std::vector<std::vector<std::uint32_t>>> checks_;  // by highest variable
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint64_t> forms_;
  std::uint32_t b_ = 0;
};

}  // namespace detail

/// Counts the affine maps whose coordinate permutation is an automorphism of
/// c, and returns a small generating set of that subgroup.
///
/// The search substitutes x_i -> row_i . x + b_i one variable at a time and
/// checks every generator whose ANF only involves assigned variables, so
/// subtrees are cut as soon as an image leaves the code. Rows are drawn in
/// increasing order from outside the span of the earlier rows. The first
/// (row, translation) pair splits the work into independent units; the
/// result does not depend on how units are spread over jobs.
inline AffineEnumResult enumerate_affine_automorphisms(const BinaryCode& c, unsigned jobs = 1) {
  const int n = c.num_vars();
  require(n >= 1 && n <= 5, "affine enumeration needs 1 <= n <= 5");
  const std::size_t degree = c.length();
  const std::size_t units = 2 * (degree - 1);

  struct UnitResult {
    std::uint64_t count = 0;
    std::vector<Permutation> gens;
  };
  std::vector<UnitResult> results(units);

  auto work = [&](std::size_t begin, std::size_t end) {
    detail::AffineSearch search(c);
    for (std::size_t u = begin; u < end; ++u) {
      detail::GeneratorReducer reducer(degree);
      search.run_unit(u, results[u].count, reducer);
      results[u].gens = reducer.take();
    }
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(units)));
  if (jobs == 1) {
    work(0, units);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back(work, units * t / jobs, units * (t + 1) / jobs);
    for (auto& th : pool) th.join();
  }

  AffineEnumResult out;
  detail::GeneratorReducer reducer(degree);
  for (auto& r : results) {
    out.count += r.count;
    for (const auto& g : r.gens) reducer.offer(g);
  }
  out.generators = reducer.take();
  return out;
}

}  // namespace polarauto
