#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "polarauto/error.hpp"
#include "polarauto/eval_vector.hpp"

namespace polarauto {

/// Bijection of {0..degree-1}; printed 1-based in cycle notation.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), 0u);
    return p;
  }

  /// From 0-based images; throws unless they form a bijection.
  static Permutation from_images(std::vector<std::uint32_t> images) {
    std::vector<char> seen(images.size(), 0);
    for (auto x : images) {
      require(x < images.size(), "permutation image out of range");
      require(!seen[x], "permutation images repeat a point");
      seen[x] = 1;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
  }

  /// Caller guarantees a bijection.
  static Permutation from_images_unchecked(std::vector<std::uint32_t> images) {
    Permutation p;
    p.img_ = std::move(images);
    return p;
  }

  /// Transposition of two 0-based points.
  static Permutation transposition(std::size_t degree, std::uint32_t a, std::uint32_t b) {
    Permutation p = identity(degree);
    std::swap(p.img_.at(a), p.img_.at(b));
    return p;
  }

  /// Parses 1-based disjoint cycles such as "(1,2,3)(4,5)". "()" or an empty
  /// string gives the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t degree) {
    Permutation p = identity(degree);
    std::vector<char> used(degree, 0);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
      require(text[pos] == '(', "cycle notation must start each cycle with '('");
      ++pos;
      std::vector<std::uint32_t> cycle;
      skip_ws();
      while (pos < text.size() && text[pos] != ')') {
        skip_ws();
        std::size_t start = pos;
        std::uint64_t value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
          value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
          require(value <= degree, "cycle point out of range");
          ++pos;
        }
        require(pos > start, "expected a point in cycle notation");
        require(value >= 1, "cycle point out of range");
        require(!used[value - 1], "point repeated in cycle notation");
        used[value - 1] = 1;
        cycle.push_back(static_cast<std::uint32_t>(value - 1));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          skip_ws();
          require(pos < text.size() && text[pos] != ')', "dangling comma in cycle");
        }
      }
      require(pos < text.size(), "unterminated cycle");
      ++pos;
      for (std::size_t i = 0; i < cycle.size(); ++i)
        p.img_[cycle[i]] = cycle[(i + 1) % cycle.size()];
      skip_ws();
    }
    return p;
  }

  /// Cycles ordered by smallest moved point, each starting at that point.
  std::string to_cycles() const {
    std::string out;
    std::vector<char> seen(img_.size(), 0);
    for (std::uint32_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      out += "(";
      std::uint32_t j = i;
      bool first = true;
      do {
        if (!first) out += ",";
        first = false;
        out += std::to_string(j + 1);
        seen[j] = 1;
        j = img_[j];
      } while (j != i);
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator[](std::size_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  bool is_identity() const {
    for (std::uint32_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// Smallest moved point, or degree() for the identity.
  std::size_t first_moved() const {
    for (std::uint32_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return i;
    return img_.size();
  }

  Permutation inverse() const {
    Permutation q;
    q.img_.resize(img_.size());
    for (std::uint32_t i = 0; i < img_.size(); ++i) q.img_[img_[i]] = i;
    return q;
  }

  /// Smallest k >= 1 with p^k = identity.
  std::uint64_t order() const {
    std::uint64_t l = 1;
    std::vector<char> seen(img_.size(), 0);
    for (std::uint32_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = 1;
        ++len;
      }
      l = std::lcm(l, len);
    }
    return l;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> img_;
};

/// compose(p, q)(i) = p(q(i)): q acts first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  require(p.degree() == q.degree(), "composing permutations of different degrees");
  std::vector<std::uint32_t> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[q[i]];
  return Permutation::from_images_unchecked(std::move(out));
}

inline Permutation inverse(const Permutation& p) { return p.inverse(); }

inline Permutation power(const Permutation& p, std::uint64_t k) {
  Permutation r = Permutation::identity(p.degree());
  for (std::uint64_t i = 0; i < k; ++i) r = compose(p, r);
  return r;
}

/// Push-forward action: result[p(i)] = v[i].
inline EvalVector apply_to_vector(const Permutation& p, const EvalVector& v) {
  require(p.degree() == v.size(), "permutation degree does not match the vector length");
  EvalVector out(v.num_vars());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.test(i)) out.set(p[i]);
  return out;
}

/// Push-forward on a packed word (degree <= 64).
inline std::uint64_t apply_to_word(const Permutation& p, std::uint64_t v) {
  std::uint64_t out = 0;
  while (v) {
    int i = std::countr_zero(v);
    v &= v - 1;
    out |= std::uint64_t{1} << p[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace polarauto
