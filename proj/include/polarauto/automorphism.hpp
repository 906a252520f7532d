#pragma once

// Automorphism tests and classification for monomial codes.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polarauto/affine.hpp"
#include "polarauto/code.hpp"
#include "polarauto/error.hpp"
#include "polarauto/monomial.hpp"
#include "polarauto/permutation.hpp"

namespace polarauto {

/// ANF of the push-forward image of a monomial.
inline MonomialSet image_anf(const Permutation& p, const Monomial& m) {
  return eval_to_anf(apply_to_vector(p, evaluate(m)));
}

/// Index of the first generator whose image leaves the code, if any.
inline std::optional<std::size_t> first_escaping_generator(const BinaryCode& c,
                                                           const Permutation& p) {
  require(p.degree() == c.length(), "permutation degree does not match the code length");
  const auto& gens = c.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!c.contains(apply_to_vector(p, gens[i]))) return i;
  return std::nullopt;
}

/// Checking generators suffices: coordinate permutations are linear.
inline bool is_automorphism(const BinaryCode& c, const Permutation& p) {
  return !first_escaping_generator(c, p).has_value();
}

enum class Verdict { affine, non_affine, not_automorphism };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::affine:
      return "affine";
    case Verdict::non_affine:
      return "non_affine";
    case Verdict::not_automorphism:
      return "not_automorphism";
  }
  return "?";
}

struct AutClassification {
  Verdict verdict = Verdict::not_automorphism;

  // affine: the substitution read off the images, x_i -> b_i + sum_j A_ij x_j,
  // and its block presentation. Under affine_to_permutation the substitution
  // induces the inverse of the classified permutation (see point_map()).
  std::optional<AffineMap> substitution;
  std::optional<AffinePresentation> presentation;

  // non_affine: a variable whose image has degree >= 2, and one such term.
  int witness_var = -1;
  std::optional<Monomial> witness_monomial;

  // not_automorphism: a generator whose image leaves the code.
  int witness_generator = -1;

  /// Affine map whose coordinate permutation is the classified permutation.
  AffineMap point_map() const {
    require(substitution.has_value(), "only affine verdicts carry a map");
    return inverse(*substitution);
  }
};

inline AutClassification classify(const BinaryCode& c, const Permutation& p) {
  AutClassification out;
  if (auto bad = first_escaping_generator(c, p)) {
    out.verdict = Verdict::not_automorphism;
    out.witness_generator = static_cast<int>(*bad);
    return out;
  }
  const int n = c.num_vars();
  AffineMap f;
  f.n = n;
  f.rows.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    MonomialSet img = image_anf(p, Monomial(n, 1u << i));
    for (const auto& m : img) {
      if (m.degree() >= 2) {
        out.verdict = Verdict::non_affine;
        out.witness_var = i;
        out.witness_monomial = m;
        return out;
      }
      if (m.degree() == 0)
        f.b |= 1u << i;
      else
        f.rows[i] |= m.mask();
    }
  }
  // A bijection with affine images is an affine bijection.
  if (!f.invertible()) throw std::logic_error("affine images of a permutation are dependent");
  out.verdict = Verdict::affine;
  out.presentation = AffinePresentation(f);
  out.substitution = std::move(f);
  return out;
}

/// Permutation whose push-forward sends x_i to images[i] for every i.
///
/// Coordinate j carries the source signature (x_0(j), ..., x_{n-1}(j)); it is
/// sent to the unique coordinate where (f_0, ..., f_{n-1}) takes that value.
inline Permutation permutation_from_images(int n, std::span<const MonomialSet> images) {
  require(n >= 1 && n <= kMaxVars, "variable count must be in [1, 20]");
  require(images.size() == static_cast<std::size_t>(n), "need exactly one image per variable");
  const std::uint32_t size = 1u << n;
  std::vector<EvalVector> targets;
  for (const auto& f : images) {
    require(f.num_vars() == n, "image lives in a different variable count");
    targets.push_back(anf_to_eval(f));
  }
  std::vector<std::int64_t> by_signature(size, -1);
  for (std::uint32_t q = 0; q < size; ++q) {
    std::uint32_t sig = 0;
    for (int i = 0; i < n; ++i) sig |= static_cast<std::uint32_t>(targets[i].test(q)) << i;
    require(by_signature[sig] < 0, "images do not separate points, so they define no permutation");
    by_signature[sig] = q;
  }
  std::vector<std::uint32_t> img(size);
  for (std::uint32_t j = 0; j < size; ++j)
    img[j] = static_cast<std::uint32_t>(by_signature[point_of_coordinate(j, n)]);
  return Permutation::from_images(std::move(img));
}

/// Images x_i -> x_i except x_target -> x_target + added.
inline Permutation substitution_permutation(int n, int target, const MonomialSet& added) {
  std::vector<MonomialSet> images;
  for (int i = 0; i < n; ++i) {
    MonomialSet f(n);
    f.insert(Monomial(n, 1u << i));
    if (i == target)
      for (const auto& m : added) f.toggle(m);
    images.push_back(std::move(f));
  }
  return permutation_from_images(n, images);
}

/// Lower-triangular affine generators: x_i -> x_i + x_j for every j < i,
/// then x_i -> x_i + 1 for every i.
inline std::vector<Permutation> lta_generators(int n) {
  require(n >= 2 && n <= kMaxVars, "lta_generators needs n >= 2");
  std::vector<Permutation> out;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) out.push_back(affine_to_permutation(AffineMap::transvection(n, i, j)));
  for (int i = 0; i < n; ++i) out.push_back(affine_to_permutation(AffineMap::translation(n, i)));
  return out;
}

}  // namespace polarauto
