#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarauto/error.hpp"

namespace polarauto {

inline constexpr int kMaxVars = 20;

/// Truth table of a boolean function in n variables: 2^n bits.
///
/// Coordinates are 1-based in text and 0-based in the accessors; bit i of
/// the packed storage is coordinate i+1.
class EvalVector {
 public:
  EvalVector() = default;

  explicit EvalVector(int n) : n_(n) {
    require(n >= 0 && n <= kMaxVars, "variable count must be in [0, 20]");
    words_.assign(word_count(), 0);
  }

  static EvalVector ones(int n) {
    EvalVector v(n);
    for (auto& w : v.words_) w = ~std::uint64_t{0};
    v.trim();
    return v;
  }

  /// Builds a vector of length <= 64 from a packed word.
  static EvalVector from_word(int n, std::uint64_t word) {
    require(n <= 6, "from_word needs n <= 6");
    EvalVector v(n);
    v.words_[0] = word;
    v.trim();
    return v;
  }

  /// Parses a binary string, coordinate 1 leftmost. Whitespace is ignored.
  static EvalVector parse(std::string_view text) {
    std::string bits;
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
      require(c == '0' || c == '1', "bit strings may only contain 0 and 1");
      bits.push_back(c);
    }
    require(!bits.empty() && std::has_single_bit(bits.size()),
            "bit string length must be a power of two");
    int n = std::countr_zero(bits.size());
    EvalVector v(n);
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i] == '1') v.set(i);
    return v;
  }

  int num_vars() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool value = true) {
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  EvalVector& operator^=(const EvalVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  EvalVector& operator&=(const EvalVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend EvalVector operator^(EvalVector a, const EvalVector& b) { return a ^= b; }
  friend EvalVector operator&(EvalVector a, const EvalVector& b) { return a &= b; }

  std::size_t weight() const {
    std::size_t w = 0;
    for (auto x : words_) w += std::popcount(x);
    return w;
  }

  bool is_zero() const {
    for (auto x : words_)
      if (x) return false;
    return true;
  }

  /// Index of the first set coordinate (0-based), or size() if zero.
  std::size_t first_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return size();
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  /// Single-word view, only meaningful for n <= 6.
  std::uint64_t word() const { return words_.empty() ? 0 : words_[0]; }

  std::string to_string() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const EvalVector&, const EvalVector&) = default;
  friend auto operator<=>(const EvalVector&, const EvalVector&) = default;

 private:
  std::size_t word_count() const { return (size() + 63) / 64; }

  void trim() {
    if (size() < 64) words_[0] &= (std::uint64_t{1} << size()) - 1;
  }

  void check_same(const EvalVector& o) const {
    require(n_ == o.n_, "evaluation vectors have different lengths");
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
};

}  // namespace polarauto
