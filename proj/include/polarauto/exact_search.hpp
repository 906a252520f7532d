#pragma once

// Ground-truth automorphism groups of short codes.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "polarauto/affine.hpp"
#include "polarauto/automorphism.hpp"
#include "polarauto/code.hpp"
#include "polarauto/error.hpp"
#include "polarauto/gf2.hpp"
#include "polarauto/permutation.hpp"
#include "polarauto/stabilizer_chain.hpp"

namespace polarauto {

enum class SearchMethod { exhaustive, backtrack };

inline const char* method_name(SearchMethod m) {
  return m == SearchMethod::exhaustive ? "exhaustive" : "backtrack";
}

struct SearchResult {
  SearchMethod method = SearchMethod::exhaustive;
  BigInt order = 0;
  std::vector<Permutation> generators;
  // Refined coordinate classes (0-based), backtrack only.
  std::optional<std::vector<std::vector<std::uint32_t>>> partition;

  StabilizerChain chain() const {
    return StabilizerChain::build(generators, generators.empty() ? 0 : generators.front().degree());
  }
};

namespace detail {

inline std::vector<std::uint64_t> basis_words(const BinaryCode& c) {
  std::vector<std::uint64_t> out;
  for (const auto& r : c.space().rows()) out.push_back(r.word());
  return out;
}

/// The permutation with the given rank in lexicographic order.
inline std::vector<std::uint32_t> unrank_permutation(std::uint64_t rank, std::size_t size) {
  std::vector<std::uint32_t> pool(size);
  for (std::size_t i = 0; i < size; ++i) pool[i] = static_cast<std::uint32_t>(i);
  std::vector<std::uint64_t> fact(size + 1, 1);
  for (std::size_t i = 1; i <= size; ++i) fact[i] = fact[i - 1] * i;
  std::vector<std::uint32_t> out;
  for (std::size_t i = size; i > 0; --i) {
    std::uint64_t idx = rank / fact[i - 1];
    rank %= fact[i - 1];
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

}  // namespace detail

/// Tests every permutation of the coordinates. Lengths 4 and 8 only.
///
/// The 8! candidates are split into contiguous rank ranges; each range keeps
/// the automorphisms it finds in order, and the merged list is reduced to a
/// generating set by sifting, so the output does not depend on `jobs`.
inline SearchResult exhaustive_group(const BinaryCode& c, unsigned jobs = 1) {
  const std::size_t len = c.length();
  require(len == 4 || len == 8 || len <= 2, "exhaustive search needs length <= 8");
  WordSpace space;
  for (auto w : detail::basis_words(c)) space.insert(w);
  std::vector<std::uint64_t> gens;
  for (const auto& g : c.generators()) gens.push_back(g.word());

  std::uint64_t total = 1;
  for (std::size_t i = 2; i <= len; ++i) total *= i;

  struct RangeResult {
    std::uint64_t count = 0;
    std::vector<Permutation> found;
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, 64));
  std::vector<RangeResult> results(jobs);

  auto work = [&](unsigned t) {
    const std::uint64_t begin = total * t / jobs, end = total * (t + 1) / jobs;
    if (begin == end) return;
    std::vector<std::uint32_t> img = detail::unrank_permutation(begin, len);
    for (std::uint64_t r = begin; r < end; ++r) {
      bool ok = true;
      for (auto g : gens) {
        std::uint64_t out = 0;
        for (std::uint64_t s = g; s; s &= s - 1) out |= std::uint64_t{1} << img[std::countr_zero(s)];
        if (!space.contains(out)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        ++results[t].count;
        results[t].found.push_back(Permutation::from_images_unchecked(img));
      }
      std::next_permutation(img.begin(), img.end());
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  SearchResult out;
  out.method = SearchMethod::exhaustive;
  detail::GeneratorReducer reducer(len);
  std::uint64_t count = 0;
  for (const auto& r : results) {
    count += r.count;
    for (const auto& p : r.found) reducer.offer(p);
  }
  out.order = count;
  if (reducer.order() != out.order)
    throw std::logic_error("exhaustive search: generated group differs from the automorphism set");
  out.generators = reducer.take();
  return out;
}

namespace detail {

/// Depth-first construction of automorphisms with invariant pruning.
class Backtracker {
 public:
  explicit Backtracker(const BinaryCode& c) : len_(static_cast<int>(c.length())) {
    code_ = basis_words(c);
    dual_ = dual_basis(code_, len_);
    compute_invariants();
    refine_partition();
  }

  SearchResult run(const BinaryCode& c) {
    std::vector<Permutation> gens;
    std::vector<std::size_t> orbit_size(len_, 1);
    // Level i: find G_(0..i-1) from G_(0..i), which is generated by gens.
    for (int i = len_ - 2; i >= 0; --i) {
      std::vector<char> in_orbit = orbit_of(i, gens);
      for (int gamma = i + 1; gamma < len_; ++gamma) {
        if (in_orbit[gamma] || cls_[gamma] != cls_[i]) continue;
        if (auto g = find_element(i, gamma)) {
          gens.push_back(*g);
          in_orbit = orbit_of(i, gens);
        }
      }
      orbit_size[i] = static_cast<std::size_t>(std::count(in_orbit.begin(), in_orbit.end(), 1));
    }

    SearchResult out;
    out.method = SearchMethod::backtrack;
    out.order = 1;
    for (auto s : orbit_size) out.order *= s;
    for (const auto& g : gens)
      if (!is_automorphism(c, g)) throw std::logic_error("backtrack produced a non-automorphism");
    out.generators = std::move(gens);
    if (!out.generators.empty() && out.chain().order() != out.order)
      throw std::logic_error("backtrack: chain order disagrees with the orbit product");
    std::map<int, std::vector<std::uint32_t>> classes;
    for (int p = 0; p < len_; ++p) classes[cls_[p]].push_back(static_cast<std::uint32_t>(p));
    out.partition.emplace();
    for (auto& [id, pts] : classes) out.partition->push_back(std::move(pts));
    return out;
  }

 private:
  std::vector<char> orbit_of(int point, const std::vector<Permutation>& gens) const {
    std::vector<char> seen(len_, 0);
    std::vector<int> queue{point};
    seen[point] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& g : gens) {
        int img = static_cast<int>(g[queue[h]]);
        if (!seen[img]) {
          seen[img] = 1;
          queue.push_back(img);
        }
      }
    return seen;
  }

  // Per-coordinate weight profile and pairwise joint support over the
  // codebook of the code or of its dual, whichever is smaller. Both codes
  // have the same automorphisms.
  void compute_invariants() {
    const auto& src = code_.size() <= dual_.size() ? code_ : dual_;
    const std::size_t k = src.size();
    require(k <= 12, "backtrack search needs min(dim, length - dim) <= 12");
    profile_.assign(len_, std::vector<std::uint32_t>(len_ + 1, 0));
    joint_.assign(len_ * len_, 0);
    std::uint64_t word = 0;
    for (std::uint64_t step = 0; step < (std::uint64_t{1} << k); ++step) {
      if (step) word ^= src[std::countr_zero(step)];
      const int w = std::popcount(word);
      for (std::uint64_t s = word; s; s &= s - 1) {
        const int i = std::countr_zero(s);
        ++profile_[i][w];
        for (std::uint64_t t = word; t; t &= t - 1) ++joint_[i * len_ + std::countr_zero(t)];
      }
    }
  }

  // Classes start from the weight profile and are refined by the multiset of
  // (class, joint count) pairs until stable. Class ids follow sorted keys, so
  // the result only depends on invariants.
  void refine_partition() {
    std::map<std::vector<std::uint32_t>, int> ids;
    for (int p = 0; p < len_; ++p) ids.emplace(profile_[p], 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    cls_.assign(len_, 0);
    for (int p = 0; p < len_; ++p) cls_[p] = ids[profile_[p]];
    for (;;) {
      std::vector<std::vector<std::uint32_t>> keys(len_);
      for (int p = 0; p < len_; ++p) {
        std::vector<std::uint32_t> pairs;
        for (int q = 0; q < len_; ++q)
          if (q != p) pairs.push_back(static_cast<std::uint32_t>(cls_[q]) << 16 | joint_[p * len_ + q]);
        std::sort(pairs.begin(), pairs.end());
        keys[p].push_back(static_cast<std::uint32_t>(cls_[p]));
        keys[p].insert(keys[p].end(), pairs.begin(), pairs.end());
      }
      std::map<std::vector<std::uint32_t>, int> refined;
      for (const auto& key : keys) refined.emplace(key, 0);
      next = 0;
      for (auto& [key, id] : refined) id = next++;
      const auto old_count = std::set<int>(cls_.begin(), cls_.end()).size();
      for (int p = 0; p < len_; ++p) cls_[p] = refined[keys[p]];
      if (refined.size() == old_count) break;
    }
  }

  std::optional<Permutation> find_element(int level, int gamma) {
    img_.assign(len_, -1);
    used_.assign(len_, 0);
    for (int e = 0; e < level; ++e) {
      img_[e] = e;
      used_[e] = 1;
    }
    if (!try_assign(level, gamma)) return std::nullopt;
    if (!extend(level + 1)) return std::nullopt;
    std::vector<std::uint32_t> out(len_);
    for (int e = 0; e < len_; ++e) out[e] = static_cast<std::uint32_t>(img_[e]);
    return Permutation::from_images(std::move(out));
  }

  bool extend(int d) {
    if (d == len_) return true;
    for (int cand = 0; cand < len_; ++cand) {
      if (used_[cand] || cls_[cand] != cls_[d]) continue;
      if (try_assign(d, cand)) {
        if (extend(d + 1)) return true;
      }
      img_[d] = -1;
      used_[cand] = 0;
    }
    return false;
  }

  // Assigns d -> cand and checks the partial map against the invariants.
  // Leaves the assignment in place when the checks pass.
  bool try_assign(int d, int cand) {
    for (int e = 0; e < d; ++e)
      if (joint_[d * len_ + e] != joint_[cand * len_ + img_[e]]) return false;
    img_[d] = cand;
    used_[cand] = 1;
    if (!punctured_consistent(code_, d) || !punctured_consistent(dual_, d)) {
      img_[d] = -1;
      used_[cand] = 0;
      return false;
    }
    return true;
  }

  // A genuine automorphism maps the code punctured to D = {0..d} onto the
  // code punctured to its image set.
  bool punctured_consistent(const std::vector<std::uint64_t>& basis, int d) const {
    std::uint64_t dom = (d + 1 >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << (d + 1)) - 1;
    std::uint64_t ran = 0;
    for (int e = 0; e <= d; ++e) ran |= std::uint64_t{1} << img_[e];
    WordSpace target;
    for (auto g : basis) target.insert(g & ran);
    WordSpace source;
    for (auto g : basis) {
      std::uint64_t pushed = 0;
      for (std::uint64_t s = g & dom; s; s &= s - 1) pushed |= std::uint64_t{1} << img_[std::countr_zero(s)];
      source.insert(pushed);
      if (!target.contains(pushed)) return false;
    }
    return source.rank() == target.rank();
  }

  int len_;
  std::vector<std::uint64_t> code_;
  std::vector<std::uint64_t> dual_;
  std::vector<std::vector<std::uint32_t>> profile_;
  std::vector<std::uint32_t> joint_;
  std::vector<int> cls_;
  std::vector<int> img_;
  std::vector<char> used_;
};

}  // namespace detail

/// Exact automorphism group by depth-first search over coordinate images
/// (length <= 16).
///
/// Levels are processed from the last point backwards: knowing the pointwise
/// stabiliser of 0..i, for each candidate image of point i outside its
/// current orbit the search either builds an automorphism fixing 0..i-1 or
/// proves none exists. Candidates respect the refined invariant classes,
/// pairwise joint-support counts, and punctured consistency of the code and
/// of its dual; all three hold for every genuine automorphism.
inline SearchResult backtrack_group(const BinaryCode& c) {
  require(c.length() <= 16, "backtrack search needs length <= 16");
  detail::Backtracker bt(c);
  return bt.run(c);
}

}  // namespace polarauto
