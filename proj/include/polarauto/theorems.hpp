#pragma once

// Predicted automorphism groups of lifted and Reed-Muller-derived polar
// codes: order formulas, explicit generator sets, and a harness comparing
// both against computed groups.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polarauto/affine.hpp"
#include "polarauto/automorphism.hpp"
#include "polarauto/code.hpp"
#include "polarauto/error.hpp"
#include "polarauto/exact_search.hpp"
#include "polarauto/monomial.hpp"
#include "polarauto/permutation.hpp"
#include "polarauto/stabilizer_chain.hpp"

namespace polarauto {

enum class GroupKind { GL, AGL, Sym, fact };

/// |GL(d,2)|, |AGL(d,2)|, d! (Sym and fact are both d!).
inline BigInt classical_order(GroupKind kind, int d) {
  require(d >= 1, "classical_order needs d >= 1");
  BigInt out = 1;
  switch (kind) {
    case GroupKind::GL:
    case GroupKind::AGL: {
      const BigInt q = BigInt(1) << d;
      for (int i = 0; i < d; ++i) out *= q - (BigInt(1) << i);
      if (kind == GroupKind::AGL) out *= q;
      return out;
    }
    case GroupKind::Sym:
    case GroupKind::fact:
      for (int i = 2; i <= d; ++i) out *= i;
      return out;
  }
  return out;
}

/// Aut RM(r,m) is AGL(m,2) for 1 <= r <= m-2 and the full symmetric group
/// on 2^m points otherwise.
inline BigInt rm_automorphism_order(int r, int m) {
  require(m >= 1 && r >= 0 && r <= m, "rm(r,m) needs 0 <= r <= m");
  if (r >= 1 && r <= m - 2) return classical_order(GroupKind::AGL, m);
  return classical_order(GroupKind::Sym, 1 << m);
}

inline std::string rm_automorphism_name(int r, int m) {
  if (r >= 1 && r <= m - 2) return "AGL(" + std::to_string(m) + ",2)";
  return "S_" + std::to_string(1 << m);
}

/// If s is exactly the degree <= r monomials for some r, that r.
inline std::optional<int> rm_degree_of(const MonomialSet& s) {
  const int n = s.num_vars();
  for (int r = 0; r <= n; ++r)
    if (rm_monomials(r, n) == s) return r;
  return std::nullopt;
}

enum class Theorem { thm31, cor35, thm36, thm41, sec4r1, remark43 };

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::thm31: return "thm31";
    case Theorem::cor35: return "cor35";
    case Theorem::thm36: return "thm36";
    case Theorem::thm41: return "thm41";
    case Theorem::sec4r1: return "sec4r1";
    case Theorem::remark43: return "remark43";
  }
  return "?";
}

inline Theorem parse_theorem(const std::string& name) {
  for (Theorem t : {Theorem::thm31, Theorem::cor35, Theorem::thm36, Theorem::thm41,
                    Theorem::sec4r1, Theorem::remark43})
    if (name == theorem_name(t)) return t;
  throw Error("unknown theorem id: " + name);
}

/// Inputs for one theorem instance. Which fields matter:
///   thm31   base (monomial code over m vars containing 1, x_0..x_{m-1}), n > m
///   cor35   base as for thm31, n = m + 1
///   thm36   m, k, s (family3 parameters)
///   thm41   r, n with 2 <= r <= n-3
///   sec4r1  n >= 3 (r = 1)
///   remark43 n >= 4
struct TheoremParams {
  Theorem theorem = Theorem::thm31;
  int n = 0;
  int m = 0;
  int k = 0;
  int r = 0;
  std::optional<BinaryCode> base;
  std::optional<MonomialSet> s;
};

struct Factor {
  std::string label;
  BigInt value;
};

struct Prediction {
  Theorem theorem = Theorem::thm31;
  std::vector<std::pair<std::string, std::string>> params;
  BigInt predicted_order = 0;
  std::string structure_text;
  std::vector<Factor> factors;
};

/// Automorphism group of a code of length <= 16 by the cheapest exact method.
inline SearchResult exact_automorphism_group(const BinaryCode& c, unsigned jobs = 1) {
  if (c.length() <= 8) return exhaustive_group(c, jobs);
  return backtrack_group(c);
}

/// pi acting on the low m bits of each coordinate, the high bits untouched.
inline Permutation lift_permutation(const Permutation& pi, int m, int n) {
  require(pi.degree() == (std::size_t{1} << m), "permutation degree must be 2^m");
  require(n >= m && n <= kMaxVars, "lift target must have at least m variables");
  const std::uint32_t low_mask = (1u << m) - 1;
  std::vector<std::uint32_t> img(std::size_t{1} << n);
  for (std::uint32_t c = 0; c < img.size(); ++c) img[c] = pi[c & low_mask] | (c & ~low_mask);
  return Permutation::from_images_unchecked(std::move(img));
}

/// Images x_i -> x_i for i < n-1 and x_{n-1} -> x_{n-1} + c: swaps the two
/// x_{n-1} halves at exactly the coordinates where c is 1.
inline Permutation fiber_swap(int n, const MonomialSet& c) {
  require(c.num_vars() == n, "fiber swap function has the wrong variable count");
  for (const auto& mono : c) require(!mono.has_var(n - 1), "fiber swap function must not involve x_{n-1}");
  return substitution_permutation(n, n - 1, c);
}

/// x_{n-1} -> x_{n-1} + x_{n-3} x_{n-2}, all other variables fixed.
inline Permutation quadratic_shift_witness(int n) {
  require(n >= 4 && n <= kMaxVars, "quadratic_shift_witness needs n >= 4");
  MonomialSet added(n);
  added.insert(Monomial(n, (1u << (n - 3)) | (1u << (n - 2))));
  return substitution_permutation(n, n - 1, added);
}

namespace detail {

inline void check_p_shape(const BinaryCode& base) {
  require(base.monomials().has_value(), "base code needs monomial provenance");
  const int m = base.num_vars();
  require(m >= 1, "base code needs at least one variable");
  require(base.monomials()->contains(Monomial::one(m)), "base code must contain the monomial 1");
  for (int i = 0; i < m; ++i)
    require(base.monomials()->contains(Monomial(m, 1u << i)), "base code must contain every x_i");
}

/// Monomials of P_k (those in x_0..x_{k-1}), once over m and once over k variables.
inline std::pair<MonomialSet, MonomialSet> low_part(const MonomialSet& pm, int k) {
  MonomialSet over_m(pm.num_vars()), over_k(k);
  for (const auto& f : pm)
    if ((f.mask() >> k) == 0) {
      over_m.insert(f);
      over_k.insert(Monomial(k, f.mask()));
    }
  return {over_m, over_k};
}

inline std::string pow_text(const std::string& base, const std::string& exp) {
  return exp == "1" ? base : base + "^" + exp;
}

struct Family3Data {
  BinaryCode pm;
  MonomialSet pk;        // over m variables
  BinaryCode pbar_k;     // over k variables
};

inline Family3Data family3_data(int m, int k, const MonomialSet& s) {
  Family3Data d{family3_code(m, k, s).code, MonomialSet(m), BinaryCode()};
  auto [over_m, over_k] = low_part(*d.pm.monomials(), k);
  d.pk = over_m;
  d.pbar_k = BinaryCode::from_monomials(over_k);
  return d;
}

inline MonomialSet x0x1(int n) {
  MonomialSet s(n);
  s.insert(Monomial(n, 3u));
  return s;
}

}  // namespace detail

/// Order formula of the named result, with its factors.
inline Prediction predict(const TheoremParams& p) {
  Prediction out;
  out.theorem = p.theorem;
  auto add = [&](std::string label, BigInt value) {
    out.factors.push_back({std::move(label), std::move(value)});
  };
  switch (p.theorem) {
    case Theorem::thm31: {
      require(p.base.has_value(), "thm31 needs a base code");
      detail::check_p_shape(*p.base);
      const int m = p.base->num_vars();
      require(p.n > m && p.n <= 20, "thm31 needs n > m");
      const int rows = 1 << (p.n - m), cols = 1 << m;
      BigInt sym = classical_order(GroupKind::Sym, rows), block = 1;
      for (int i = 0; i < cols; ++i) block *= sym;
      std::string g_name = "G";
      BigInt g_order;
      if (auto r = rm_degree_of(*p.base->monomials())) {
        g_order = rm_automorphism_order(*r, m);
        g_name = rm_automorphism_name(*r, m);
      } else {
        require(p.base->length() <= 16, "thm31 base without a known group needs length <= 16");
        g_order = exact_automorphism_group(*p.base).order;
      }
      const std::string sym_name = "S_" + std::to_string(rows);
      add(detail::pow_text("(" + sym_name + ")", std::to_string(cols)), block);
      add(g_name, g_order);
      out.params = {{"m", std::to_string(m)}, {"n", std::to_string(p.n)},
                    {"base", p.base->monomials()->to_string()}};
      out.structure_text = detail::pow_text("(" + sym_name + ")", std::to_string(cols)) + " : " + g_name;
      break;
    }
    case Theorem::cor35: {
      require(p.base.has_value(), "cor35 needs a base code");
      detail::check_p_shape(*p.base);
      const int m = p.base->num_vars();
      require(p.n == m + 1, "cor35 needs n = m + 1");
      require(p.n <= 5, "cor35 needs n <= 5 for affine enumeration");
      BigInt h = enumerate_affine_automorphisms(*p.base).count;
      add("(Z_2)^" + std::to_string(p.n), BigInt(1) << p.n);
      add("H", h);
      out.params = {{"m", std::to_string(m)}, {"n", std::to_string(p.n)},
                    {"base", p.base->monomials()->to_string()}};
      out.structure_text = "(Z_2)^" + std::to_string(p.n) + " : H, |H| = " + h.str();
      break;
    }
    case Theorem::thm36: {
      require(p.s.has_value(), "thm36 needs S");
      auto d = detail::family3_data(p.m, p.k, *p.s);
      require(p.k <= 4, "thm36 needs k <= 4 to compute Aut of the short code");
      const int big_k = static_cast<int>(d.pk.size());
      BigInt t = exact_automorphism_group(d.pbar_k).order;
      const int e = (p.m - p.k) * big_k;
      add("(Z_2)^" + std::to_string(e), BigInt(1) << e);
      add("GL(" + std::to_string(p.m - p.k) + ",2)", classical_order(GroupKind::GL, p.m - p.k));
      add("T", t);
      out.params = {{"m", std::to_string(p.m)}, {"k", std::to_string(p.k)},
                    {"S", p.s->to_string()}, {"K", std::to_string(big_k)}};
      out.structure_text = "(Z_2)^" + std::to_string(e) + " : (GL(" + std::to_string(p.m - p.k) +
                           ",2) x T), |T| = " + t.str();
      break;
    }
    case Theorem::thm41: {
      require(p.r >= 2 && p.r <= p.n - 3, "thm41 needs 2 <= r <= n-3");
      const int m = p.r + 1, e = (p.n - m) * (m + 1);
      add("(Z_2)^" + std::to_string(e), BigInt(1) << e);
      add("AGL(" + std::to_string(m) + ",2)", classical_order(GroupKind::AGL, m));
      add("GL(" + std::to_string(p.n - m) + ",2)", classical_order(GroupKind::GL, p.n - m));
      out.params = {{"r", std::to_string(p.r)}, {"n", std::to_string(p.n)}};
      out.structure_text = "(Z_2)^" + std::to_string(e) + " : (AGL(" + std::to_string(m) + ",2) x GL(" +
                           std::to_string(p.n - m) + ",2))";
      break;
    }
    case Theorem::sec4r1: {
      require(p.n >= 3, "sec4r1 needs n >= 3");
      const int e = 4 * (p.n - 2);
      add("(Z_2)^" + std::to_string(e), BigInt(1) << e);
      add("S_4", classical_order(GroupKind::Sym, 4));
      add("GL(" + std::to_string(p.n - 2) + ",2)", classical_order(GroupKind::GL, p.n - 2));
      out.params = {{"r", "1"}, {"n", std::to_string(p.n)}};
      out.structure_text = "(Z_2)^" + std::to_string(e) + " : (S_4 x GL(" + std::to_string(p.n - 2) + ",2))";
      break;
    }
    case Theorem::remark43:
      throw Error("remark43 makes no order prediction");
  }
  out.predicted_order = 1;
  for (const auto& f : out.factors) out.predicted_order *= f.value;
  return out;
}

/// Explicit generators of the predicted group.
inline std::vector<Permutation> build_generators(const TheoremParams& p) {
  std::vector<Permutation> out;
  switch (p.theorem) {
    case Theorem::thm31: {
      require(p.base.has_value(), "thm31 needs a base code");
      detail::check_p_shape(*p.base);
      const int m = p.base->num_vars();
      require(p.n > m && p.n <= 20, "thm31 needs n > m");
      require(p.base->length() <= 16, "thm31 generators need the base group, so length <= 16");
      const std::size_t degree = std::size_t{1} << p.n;
      // Row shifts: adjacent transpositions inside each fiber of equal
      // (x_0..x_{m-1})-signature, i.e. equal low m bits.
      for (std::uint32_t low = 0; low < (1u << m); ++low)
        for (std::uint32_t h = 0; h + 1 < (1u << (p.n - m)); ++h)
          out.push_back(Permutation::transposition(degree, low | (h << m), low | ((h + 1) << m)));
      for (const auto& pi : exact_automorphism_group(*p.base).generators)
        out.push_back(lift_permutation(pi, m, p.n));
      break;
    }
    case Theorem::cor35: {
      require(p.base.has_value(), "cor35 needs a base code");
      detail::check_p_shape(*p.base);
      const int m = p.base->num_vars();
      require(p.n == m + 1 && p.n <= 5, "cor35 needs n = m + 1 <= 5");
      MonomialSet one(p.n);
      one.insert(Monomial::one(p.n));
      out.push_back(fiber_swap(p.n, one));
      for (int i = 0; i + 1 < p.n; ++i) {
        MonomialSet c(p.n);
        c.insert(Monomial(p.n, 1u << i));
        out.push_back(fiber_swap(p.n, c));
      }
      for (const auto& pi : enumerate_affine_automorphisms(*p.base).generators)
        out.push_back(lift_permutation(pi, m, p.n));
      break;
    }
    case Theorem::thm36:
    case Theorem::sec4r1: {
      const int m = p.theorem == Theorem::sec4r1 ? p.n : p.m;
      const int k = p.theorem == Theorem::sec4r1 ? 2 : p.k;
      const MonomialSet s = p.theorem == Theorem::sec4r1 ? detail::x0x1(m) : p.s.value_or(MonomialSet(m));
      require(p.theorem == Theorem::sec4r1 || p.s.has_value(), "thm36 needs S");
      require(m >= 3, "sec4r1 needs n >= 3");
      auto d = detail::family3_data(m, k, s);
      // N: x_j -> x_j + beta for beta in the monomial basis of P_k.
      for (int j = k; j < m; ++j)
        for (const auto& beta : d.pk) {
          MonomialSet add(m);
          add.insert(beta);
          out.push_back(substitution_permutation(m, j, add));
        }
      // GL(m-k, 2) on x_k..x_{m-1}.
      for (int j = k; j < m; ++j)
        for (int j2 = k; j2 < m; ++j2)
          if (j != j2) out.push_back(affine_to_permutation(AffineMap::transvection(m, j, j2)));
      // T: Aut of the short code acting on the (x_0..x_{k-1})-signature.
      for (const auto& pi : exact_automorphism_group(d.pbar_k).generators)
        out.push_back(lift_permutation(pi, k, m));
      break;
    }
    case Theorem::thm41: {
      require(p.r >= 2 && p.r <= p.n - 3, "thm41 needs 2 <= r <= n-3");
      const int n = p.n, m = p.r + 1;
      auto push = [&](const AffineMap& f) { out.push_back(affine_to_permutation(f)); };
      for (int i = 0; i < m; ++i)  // T_1
        for (int j = 0; j < m; ++j)
          if (i != j) push(AffineMap::transvection(n, i, j));
      for (int i = 0; i < m; ++i) push(AffineMap::translation(n, i));  // b_1
      for (int i = m; i < n; ++i)  // T_2
        for (int j = m; j < n; ++j)
          if (i != j) push(AffineMap::transvection(n, i, j));
      for (int i = m; i < n; ++i)  // B
        for (int j = 0; j < m; ++j) push(AffineMap::transvection(n, i, j));
      for (int i = m; i < n; ++i) push(AffineMap::translation(n, i));  // b_2
      break;
    }
    case Theorem::remark43:
      out.push_back(quadratic_shift_witness(p.n));
      break;
  }
  return out;
}

/// The code whose automorphism group the theorem describes.
inline BinaryCode theorem_code(const TheoremParams& p) {
  switch (p.theorem) {
    case Theorem::thm31:
    case Theorem::cor35:
      require(p.base.has_value(), "theorem needs a base code");
      return lift_code(*p.base, p.n);
    case Theorem::thm36:
      require(p.s.has_value(), "thm36 needs S");
      return family3_code(p.m, p.k, *p.s).code;
    case Theorem::thm41:
      return rm_plus_code(p.r, p.n);
    case Theorem::sec4r1:
      return rm_plus_code(1, p.n);
    case Theorem::remark43:
      require(p.n >= 4, "remark43 needs n >= 4");
      return rm_plus_code(p.n - 2, p.n);
  }
  throw Error("unknown theorem");
}

/// Every element of the group sends x_{n-1} to x_{n-1} plus a function of
/// x_0..x_{n-2}. The code must be a lift by one variable (no generating
/// monomial involves x_{n-1}).
inline bool check_lift_image_form(const BinaryCode& c, const SearchResult& group) {
  require(c.monomials().has_value(), "check_lift_image_form needs monomial provenance");
  const int n = c.num_vars();
  require(n >= 2, "check_lift_image_form needs n >= 2");
  for (const auto& f : *c.monomials())
    require(!f.has_var(n - 1), "code is not a one-variable lift: a monomial involves x_{n-1}");
  for (const auto& g : group.generators)
    require(g.degree() == c.length(), "group degree does not match the code length");
  const Monomial top(n, 1u << (n - 1));
  bool ok = true;
  auto check = [&](const Permutation& p) {
    if (!ok) return;
    MonomialSet img = image_anf(p, top);
    if (!img.contains(top)) {
      ok = false;
      return;
    }
    for (const auto& f : img)
      if (f != top && f.has_var(n - 1)) ok = false;
  };
  if (group.generators.empty())
    check(Permutation::identity(c.length()));
  else
    group.chain().for_each_element(check);
  return ok;
}

struct VerificationReport {
  Theorem theorem = Theorem::thm31;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<Prediction> prediction;
  std::size_t generator_count = 0;
  std::vector<std::string> generator_failures;
  std::optional<BigInt> constructed_order;
  std::optional<BigInt> exact_order;
  std::optional<BigInt> affine_count;
  std::optional<std::string> classification;
  bool pass = false;
};

/// Runs predict, build_generators, the automorphism test on every generator
/// and the chain order, then whichever exact comparison is in range:
/// full search for lengths <= 16, affine enumeration for cor35 and thm41.
inline VerificationReport verify(const TheoremParams& p, unsigned jobs = 1) {
  VerificationReport rep;
  rep.theorem = p.theorem;
  const BinaryCode code = theorem_code(p);
  std::vector<Permutation> gens = build_generators(p);
  rep.generator_count = gens.size();
  for (const auto& g : gens)
    if (!is_automorphism(code, g)) rep.generator_failures.push_back(g.to_cycles());

  if (p.theorem == Theorem::remark43) {
    rep.params = {{"n", std::to_string(p.n)}, {"code", "rm_plus(" + std::to_string(p.n - 2) + "," +
                                                           std::to_string(p.n) + ")"}};
    AutClassification cls = classify(code, gens.front());
    rep.classification = verdict_name(cls.verdict);
    rep.pass = rep.generator_failures.empty() && cls.verdict == Verdict::non_affine;
    return rep;
  }

  rep.prediction = predict(p);
  rep.params = rep.prediction->params;
  const BigInt& want = rep.prediction->predicted_order;
  rep.constructed_order = StabilizerChain::build(gens, code.length()).order();

  const bool affine_claim = p.theorem == Theorem::cor35 || p.theorem == Theorem::thm41;
  if (affine_claim && code.num_vars() <= 5)
    rep.affine_count = enumerate_affine_automorphisms(code, jobs).count;
  // cor35 describes only the affine subgroup, so the full group is not compared.
  if (p.theorem != Theorem::cor35 && code.length() <= 16)
    rep.exact_order = exact_automorphism_group(code, jobs).order;

  rep.pass = rep.generator_failures.empty() && *rep.constructed_order == want &&
             (!rep.exact_order || *rep.exact_order == want) &&
             (!rep.affine_count || *rep.affine_count == want);
  return rep;
}

}  // namespace polarauto
