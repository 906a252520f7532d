#pragma once

// Boolean monomials over F2, their evaluation vectors, the decreasing
// partial order and algebraic normal form conversion.
//
// Point convention: coordinate j (1-based) carries the point whose i-th
// variable is 1 - bit_i(j-1). With it, x_i of length 2^{n+1} is x_i of
// length 2^n concatenated with itself and x_n = (1...1 | 0...0).

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarauto/error.hpp"
#include "polarauto/eval_vector.hpp"

namespace polarauto {

/// Product of distinct variables x_i, stored as a bitmask of indices.
/// The empty product is the constant monomial 1.
class Monomial {
 public:
  Monomial() = default;

  Monomial(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    require(n >= 0 && n <= kMaxVars, "variable count must be in [0, 20]");
    require(n == 32 || (mask >> n) == 0, "monomial uses a variable index >= n");
  }

  static Monomial one(int n) { return Monomial(n, 0); }

  static Monomial from_vars(int n, std::span<const int> vars) {
    std::uint32_t mask = 0;
    for (int v : vars) {
      require(v >= 0 && v < n, "monomial uses a variable index >= n");
      require(!(mask & (1u << v)), "monomial repeats a variable");
      mask |= 1u << v;
    }
    return Monomial(n, mask);
  }

  static Monomial from_vars(int n, std::initializer_list<int> vars) {
    return from_vars(n, std::span<const int>(vars.begin(), vars.size()));
  }

  /// Parses "1" or "x0x1x2" (indices strictly increasing; "x_0" also accepted).
  static Monomial parse(int n, std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    require(!text.empty(), "empty monomial");
    if (text == "1") return one(n);
    std::vector<int> vars;
    std::size_t pos = 0;
    while (pos < text.size()) {
      require(text[pos] == 'x', "monomial factors must look like x<index>");
      ++pos;
      if (pos < text.size() && text[pos] == '_') ++pos;
      std::size_t start = pos;
      int value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        require(value <= kMaxVars, "variable index too large");
        ++pos;
      }
      require(pos > start, "missing variable index");
      require(vars.empty() || value > vars.back(),
              "monomial indices must be strictly increasing");
      vars.push_back(value);
    }
    return from_vars(n, vars);
  }

  int num_vars() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int degree() const { return std::popcount(mask_); }
  bool has_var(int i) const { return (mask_ >> i) & 1u; }

  std::vector<int> vars() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (has_var(i)) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    if (mask_ == 0) return "1";
    std::string s;
    for (int i : vars()) s += "x" + std::to_string(i);
    return s;
  }

  Monomial operator*(const Monomial& o) const {
    require(n_ == o.n_, "monomials live in different variable counts");
    return Monomial(n_, mask_ | o.mask_);
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Canonical order: degree, then lexicographic on ascending index lists.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    std::uint32_t x = a.mask_, y = b.mask_;
    while (x || y) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i <=> j;
      x &= x - 1;
      y &= y - 1;
    }
    return std::strong_ordering::equal;
  }

 private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

/// Set of monomials in a common ambient variable count. Doubles as an ANF:
/// the represented function is the XOR of the members' evaluations.
class MonomialSet {
 public:
  using container = std::set<Monomial>;
  using const_iterator = container::const_iterator;

  MonomialSet() = default;
  explicit MonomialSet(int n) : n_(n) {
    require(n >= 0 && n <= kMaxVars, "variable count must be in [0, 20]");
  }
  MonomialSet(int n, std::initializer_list<Monomial> ms) : MonomialSet(n) {
    for (const auto& m : ms) insert(m);
  }

  /// Parses "1+x0+x1", "x0x1,x1x2" or "0" (empty). Duplicates are rejected.
  static MonomialSet parse(int n, std::string_view text) {
    MonomialSet s(n);
    std::string_view rest = text;
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    if (rest.empty() || rest == "0") return s;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find_first_of("+,", pos);
      if (end == std::string_view::npos) end = text.size();
      Monomial m = Monomial::parse(n, text.substr(pos, end - pos));
      require(!s.contains(m), "duplicate monomial " + m.to_string());
      s.insert(m);
      pos = end + 1;
    }
    return s;
  }

  int num_vars() const { return n_; }

  bool insert(const Monomial& m) {
    require(m.num_vars() == n_, "monomial does not match the set's variable count");
    return members_.insert(m).second;
  }

  /// Symmetric difference with a single monomial (ANF addition).
  void toggle(const Monomial& m) {
    require(m.num_vars() == n_, "monomial does not match the set's variable count");
    if (!members_.erase(m)) members_.insert(m);
  }

  bool erase(const Monomial& m) { return members_.erase(m) > 0; }
  bool contains(const Monomial& m) const { return members_.count(m) > 0; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  /// Largest member degree; -1 for the empty set (the zero function).
  int degree() const {
    int d = -1;
    for (const auto& m : members_) d = std::max(d, m.degree());
    return d;
  }

  std::string to_string() const {
    if (members_.empty()) return "0";
    std::string s;
    for (const auto& m : members_) {
      if (!s.empty()) s += "+";
      s += m.to_string();
    }
    return s;
  }

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  int n_ = 0;
  container members_;
};

/// Truth table of a monomial under the module point convention.
inline EvalVector evaluate(const Monomial& m) {
  EvalVector v(m.num_vars());
  const std::size_t size = v.size();
  const std::uint32_t mask = m.mask();
  for (std::size_t p = 0; p < size; ++p)
    if ((p & mask) == 0) v.set(p);
  return v;
}

/// All 2^n monomials in n variables, in canonical order.
inline std::vector<Monomial> all_monomials(int n) {
  std::vector<Monomial> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) out.emplace_back(n, mask);
  std::sort(out.begin(), out.end());
  return out;
}

/// The decreasing order f <= g: some divisor g' of g with deg g' = deg f
/// dominates f index by index. Decided by greedy matching of sorted indices.
inline bool monomial_leq(const Monomial& f, const Monomial& g) {
  require(f.num_vars() == g.num_vars(), "monomials live in different variable counts");
  if (f.degree() > g.degree()) return false;
  std::uint32_t rest = g.mask();
  std::uint32_t fm = f.mask();
  while (fm) {
    int a = std::countr_zero(fm);
    fm &= fm - 1;
    std::uint32_t candidates = rest & ~((1u << a) - 1);
    if (!candidates) return false;
    rest &= ~(candidates & -candidates);
  }
  return true;
}

struct ClosureResult {
  MonomialSet closure;
  bool was_decreasing = false;
};

/// Downward closure under the decreasing order.
///
/// Walks the covering relations: drop one variable, or lower one index by one
/// when the lower index is unused. Every f <= g is reachable through them.
inline ClosureResult decreasing_closure(const MonomialSet& s) {
  MonomialSet out(s.num_vars());
  std::deque<Monomial> todo(s.begin(), s.end());
  for (const auto& m : s) out.insert(m);
  const int n = s.num_vars();
  while (!todo.empty()) {
    Monomial g = todo.front();
    todo.pop_front();
    for (int i : g.vars()) {
      std::uint32_t base = g.mask() & ~(1u << i);
      std::uint32_t cand[2] = {base, ~0u};
      if (i > 0 && !g.has_var(i - 1)) cand[1] = base | (1u << (i - 1));
      for (std::uint32_t c : cand) {
        if (c == ~0u) continue;
        Monomial f(n, c);
        if (out.insert(f)) todo.push_back(f);
      }
    }
  }
  bool same = out.size() == s.size();
  return {std::move(out), same};
}

/// XOR of the members' evaluations.
inline EvalVector anf_to_eval(const MonomialSet& a) {
  EvalVector v(a.num_vars());
  for (const auto& m : a) v ^= evaluate(m);
  return v;
}

/// Binary Moebius transform. Reading the truth table backwards turns the
/// coordinate index into the point itself (bit i of N-1-p is x_i), after
/// which the standard subset transform yields the ANF coefficients.
inline MonomialSet eval_to_anf(const EvalVector& v) {
  const int n = v.num_vars();
  const std::size_t size = v.size();
  std::vector<std::uint8_t> f(size);
  for (std::size_t q = 0; q < size; ++q) f[q] = v.test(size - 1 - q);
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t q = 0; q < size; ++q)
      if (q & bit) f[q] ^= f[q ^ bit];
  }
  MonomialSet out(n);
  for (std::size_t q = 0; q < size; ++q)
    if (f[q]) out.insert(Monomial(n, static_cast<std::uint32_t>(q)));
  return out;
}

}  // namespace polarauto
