#pragma once

// Base and strong generating set for permutation groups of small degree.
//
// Deterministic incremental Schreier-Sims: base points are chosen as the
// smallest point moved by the generator that forces a new level, orbits are
// built breadth-first in generator order, and the finished chain is checked
// by sifting every input generator.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polarauto/error.hpp"
#include "polarauto/permutation.hpp"

namespace polarauto {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

class StabilizerChain {
 public:
  StabilizerChain() = default;

  static StabilizerChain build(std::span<const Permutation> gens, std::size_t degree) {
    StabilizerChain c;
    c.degree_ = degree;
    for (const auto& g : gens)
      require(g.degree() == degree, "generators have different degrees");
    c.run(gens);
    for (const auto& g : gens)
      if (!c.contains(g)) throw std::logic_error("stabilizer chain failed to sift a generator");
    return c;
  }

  static StabilizerChain build(std::span<const Permutation> gens) {
    require(!gens.empty(), "group_order needs at least one generator");
    return build(gens, gens.front().degree());
  }

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }

  std::vector<std::uint32_t> base() const {
    std::vector<std::uint32_t> b;
    for (const auto& l : levels_) b.push_back(l.point);
    return b;
  }

  std::vector<std::size_t> orbit_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& l : levels_) s.push_back(l.orbit.size());
    return s;
  }

  /// Product of the basic orbit lengths.
  BigInt order() const {
    BigInt o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

  /// Strong generators fixing the first i base points.
  const std::vector<Permutation>& level_generators(std::size_t i) const {
    return levels_.at(i).gens;
  }

  const std::vector<Permutation>& strong_generators() const {
    static const std::vector<Permutation> none;
    return levels_.empty() ? none : levels_.front().gens;
  }

  bool contains(const Permutation& p) const {
    require(p.degree() == degree_, "permutation degree does not match the chain");
    return sift(p, 0).first.is_identity();
  }

  /// Calls f on every group element exactly once (as u_0 u_1 ... u_{k-1}).
  template <class F>
  void for_each_element(F&& f) const {
    Permutation acc = Permutation::identity(degree_);
    visit(0, acc, f);
  }

 private:
  struct Level {
    std::uint32_t point = 0;
    std::vector<Permutation> gens;
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> slot;  // point -> index into reps, -1 if outside orbit
    std::vector<Permutation> reps;   // reps[s](point) = orbit[s]
    std::vector<Permutation> reps_inv;
  };

  template <class F>
  void visit(std::size_t i, const Permutation& acc, F& f) const {
    if (i == levels_.size()) {
      f(acc);
      return;
    }
    for (const auto& r : levels_[i].reps) visit(i + 1, compose(acc, r), f);
  }

  void rebuild_orbit(Level& l) const {
    l.orbit.assign(1, l.point);
    l.slot.assign(degree_, -1);
    l.reps.assign(1, Permutation::identity(degree_));
    l.reps_inv.assign(1, Permutation::identity(degree_));
    l.slot[l.point] = 0;
    for (std::size_t head = 0; head < l.orbit.size(); ++head) {
      const std::uint32_t pt = l.orbit[head];
      for (const auto& g : l.gens) {
        const std::uint32_t img = g[pt];
        if (l.slot[img] >= 0) continue;
        l.slot[img] = static_cast<std::int32_t>(l.orbit.size());
        l.orbit.push_back(img);
        Permutation rep = compose(g, l.reps[head]);
        l.reps_inv.push_back(rep.inverse());
        l.reps.push_back(std::move(rep));
      }
    }
  }

  // Strips h through levels from+1.. . Returns the residue and the 1-based
  // index of the level where it dropped out, or depth()+1 when it went through.
  std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const auto& l = levels_[i];
      const std::uint32_t beta = h[l.point];
      if (beta == l.point) continue;
      const std::int32_t s = l.slot[beta];
      if (s < 0) return {std::move(h), i + 1};
      h = compose(l.reps_inv[s], h);
    }
    return {std::move(h), levels_.size() + 1};
  }

  void run(std::span<const Permutation> input) {
    std::vector<Permutation> gens;
    for (const auto& g : input)
      if (!g.is_identity()) gens.push_back(g);
    // Every generator must move some base point.
    for (const auto& g : gens) {
      bool moves_base = false;
      for (const auto& l : levels_) moves_base = moves_base || g[l.point] != l.point;
      if (!moves_base) {
        Level l;
        l.point = static_cast<std::uint32_t>(g.first_moved());
        levels_.push_back(std::move(l));
      }
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      for (const auto& g : gens) {
        bool fixes = true;
        for (std::size_t j = 0; j < i; ++j) fixes = fixes && g[levels_[j].point] == levels_[j].point;
        if (fixes) levels_[i].gens.push_back(g);
      }
      rebuild_orbit(levels_[i]);
    }

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool restart = false;
      Level& l = levels_[static_cast<std::size_t>(i)];
      for (std::size_t a = 0; !restart && a < l.orbit.size(); ++a) {
        for (std::size_t b = 0; !restart && b < l.gens.size(); ++b) {
          const Permutation& g = l.gens[b];
          const std::int32_t s = l.slot[g[l.orbit[a]]];
          Permutation schreier = compose(l.reps_inv[s], compose(g, l.reps[a]));
          auto [h, j] = sift(std::move(schreier), static_cast<std::size_t>(i) + 1);
          bool extend = j <= levels_.size();
          if (!extend && !h.is_identity()) {
            extend = true;
            Level fresh;
            fresh.point = static_cast<std::uint32_t>(h.first_moved());
            levels_.push_back(std::move(fresh));
          }
          if (extend) {
            for (std::size_t t = static_cast<std::size_t>(i) + 1; t < j; ++t) {
              levels_[t].gens.push_back(h);
              rebuild_orbit(levels_[t]);
            }
            i = static_cast<std::ptrdiff_t>(j) - 1;
            restart = true;
          }
        }
      }
      if (!restart) --i;
    }
  }

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

inline StabilizerChain group_order(std::span<const Permutation> gens) {
  return StabilizerChain::build(gens);
}

inline bool chain_contains(const StabilizerChain& chain, const Permutation& p) {
  return chain.contains(p);
}

}  // namespace polarauto
