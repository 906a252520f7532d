#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace polarauto;
using testing_helpers::generator_words;
using testing_helpers::ms;

namespace {
Permutation cyc(const char* text, std::size_t degree = 8) { return Permutation::parse_cycles(text, degree); }
}  // namespace

TEST_CASE("images of variables", "[automorphism]") {
  auto eta = cyc("(1,8,6,7,5,4,2,3)");
  CHECK(image_anf(eta, Monomial::parse(3, "x0")) == ms(3, "1+x0+x1"));
  CHECK(image_anf(eta, Monomial::parse(3, "x1")) == ms(3, "1+x1"));
  CHECK(image_anf(eta, Monomial::parse(3, "x2")) == ms(3, "1+x0+x1+x0x1+x2"));
  CHECK(image_anf(Permutation::identity(8), Monomial::parse(3, "x0x2")) == ms(3, "x0x2"));
}

TEST_CASE("automorphism tests", "[automorphism]") {
  auto tau = cyc("(1,2,3,4,5,6,7,8)");
  CHECK(is_automorphism(code_from_monomials(ms(3, "1+x0+x1")), tau));
  CHECK_FALSE(is_automorphism(rm_code(1, 3), tau));
  CHECK(is_automorphism(rm_code(2, 4), Permutation::identity(16)));
  CHECK_THROWS_AS(is_automorphism(rm_code(1, 3), Permutation::identity(4)), Error);
}

TEST_CASE("affine maps to permutations", "[automorphism]") {
  CHECK(affine_to_permutation(AffineMap::identity(3)).is_identity());
  CHECK(affine_to_permutation(AffineMap::translation(3, 2)).to_cycles() == "(1,5)(2,6)(3,7)(4,8)");
  AffineMap swap = AffineMap::identity(3);
  swap.rows = {0b010, 0b001, 0b100};
  CHECK(affine_to_permutation(swap).to_cycles() == "(2,3)(6,7)");
  // The permutation sends each codeword to its image under the map's inverse substitution.
  AffineMap f = compose(AffineMap::transvection(3, 2, 0), AffineMap::translation(3, 1));
  auto p = affine_to_permutation(f);
  auto g = compose(f, inverse(f));
  CHECK(affine_to_permutation(g).is_identity());
  CHECK(compose(p, affine_to_permutation(inverse(f))).is_identity());
}

TEST_CASE("classification of the worked example", "[automorphism]") {
  auto c = rm_code(1, 3);
  auto res = classify(c, cyc("(1,7,5,3)(2,8,6,4)"));
  REQUIRE(res.verdict == Verdict::affine);
  const auto& sub = *res.substitution;
  CHECK(sub.rows == std::vector<std::uint32_t>{0b001, 0b010, 0b110});
  CHECK(sub.b == 0b110);
  CHECK(res.presentation->rows() ==
        std::vector<std::vector<int>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 1, 1}});
  CHECK(affine_to_permutation(res.point_map()) == cyc("(1,7,5,3)(2,8,6,4)"));
  CHECK(affine_to_permutation(sub) == cyc("(1,3,5,7)(2,4,6,8)"));

  auto id = classify(c, Permutation::identity(8));
  REQUIRE(id.verdict == Verdict::affine);
  CHECK(id.presentation->map() == AffineMap::identity(3));

  auto bad = classify(c, cyc("(1,2,3,4,5,6,7,8)"));
  CHECK(bad.verdict == Verdict::not_automorphism);
  CHECK(bad.witness_generator >= 0);
}

TEST_CASE("non-affine classification", "[automorphism]") {
  auto w = quadratic_shift_witness(4);
  auto res = classify(rm_plus_code(2, 4), w);
  REQUIRE(res.verdict == Verdict::non_affine);
  CHECK(res.witness_var == 3);
  CHECK(*res.witness_monomial == Monomial::parse(4, "x1x2"));
}

TEST_CASE("permutations from variable images", "[automorphism]") {
  std::vector<MonomialSet> eta{ms(3, "1+x0+x1"), ms(3, "1+x1"), ms(3, "1+x0+x1+x0x1+x2")};
  CHECK(permutation_from_images(3, eta).to_cycles() == "(1,8,6,7,5,4,2,3)");
  std::vector<MonomialSet> id{ms(3, "x0"), ms(3, "x1"), ms(3, "x2")};
  CHECK(permutation_from_images(3, id).is_identity());
  std::vector<MonomialSet> sw{ms(3, "x1"), ms(3, "x0"), ms(3, "x2")};
  CHECK(permutation_from_images(3, sw).to_cycles() == "(2,3)(6,7)");
  std::vector<MonomialSet> dup{ms(3, "x0"), ms(3, "x0"), ms(3, "x2")};
  CHECK_THROWS_AS(permutation_from_images(3, dup), Error);
  // Realized images come back through image_anf.
  auto p = permutation_from_images(3, eta);
  for (int i = 0; i < 3; ++i) CHECK(image_anf(p, Monomial(3, 1u << i)) == eta[i]);
}

TEST_CASE("lower-triangular affine generators", "[automorphism]") {
  CHECK(lta_generators(2).size() == 3);
  CHECK(lta_generators(3).size() == 6);
  auto f = family3_code(3, 2, ms(3, "x0x1")).code;
  for (const auto& g : lta_generators(3)) CHECK(is_automorphism(f, g));
  // The upper-triangular direction fails on the same code.
  CHECK_FALSE(is_automorphism(f, affine_to_permutation(AffineMap::transvection(3, 0, 2))));
}

TEST_CASE("lower-triangular generators preserve every decreasing code at n = 3", "[automorphism][property]") {
  auto gens = lta_generators(3);
  int decreasing = 0;
  for (std::uint32_t subset = 1; subset < 256; ++subset) {
    MonomialSet s(3);
    for (std::uint32_t f = 0; f < 8; ++f)
      if ((subset >> f) & 1u) s.insert(Monomial(3, f));
    if (!decreasing_closure(s).was_decreasing) continue;
    ++decreasing;
    auto c = code_from_monomials(s);
    for (const auto& g : gens) CHECK(is_automorphism(c, g));
  }
  CHECK(decreasing == 9);
}

TEST_CASE("affine enumeration against brute force", "[automorphism][affine]") {
  CHECK(enumerate_affine_automorphisms(rm_code(1, 3)).count == 1344);
  CHECK(enumerate_affine_automorphisms(lift_code(rm_code(1, 2), 3)).count == 192);
  CHECK(enumerate_affine_automorphisms(code_from_information_set(PolarSpec(2, {0, 1, 2, 3}))).count == 24);
  std::vector<BinaryCode> corpus{rm_code(1, 3), rm_plus_code(1, 3), family3_code(3, 2, ms(3, "x0x1")).code,
                                 lift_code(rm_code(1, 2), 3), code_from_monomials(ms(3, "1+x2+x0x1")),
                                 code_from_monomials(ms(3, "x0+x1x2"))};
  for (const auto& c : corpus) {
    auto res = enumerate_affine_automorphisms(c);
    CHECK(res.count == oracle::affine_count(3, generator_words(c)));
    for (const auto& g : res.generators) CHECK(is_automorphism(c, g));
    if (!res.generators.empty()) CHECK(group_order(res.generators).order() == res.count);
  }
}

TEST_CASE("affine enumeration at n = 4", "[automorphism][affine]") {
  auto l4 = lift_code(rm_code(1, 2), 4);
  // Brute force over all of AGL(4,2).
  const std::uint64_t want = oracle::affine_count(4, generator_words(l4));
  CHECK(want == 9216);
  CHECK(enumerate_affine_automorphisms(l4).count == want);
  auto f = family3_code(4, 2, ms(4, "x0x1")).code;
  CHECK(enumerate_affine_automorphisms(f).count == oracle::affine_count(4, generator_words(f)));
}

TEST_CASE("affine enumeration is independent of the job count", "[automorphism][affine]") {
  auto c = rm_plus_code(1, 4);
  auto one = enumerate_affine_automorphisms(c, 1);
  for (unsigned jobs : {2u, 3u, 7u}) {
    auto many = enumerate_affine_automorphisms(c, jobs);
    CHECK(many.count == one.count);
    CHECK(many.generators == one.generators);
  }
}
