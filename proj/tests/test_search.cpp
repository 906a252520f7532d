#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace polarauto;
using testing_helpers::generator_words;
using testing_helpers::ms;

namespace {

std::vector<BinaryCode> length8_corpus() {
  std::vector<BinaryCode> out{rm_code(0, 3),
                              rm_code(1, 3),
                              rm_code(2, 3),
                              rm_code(3, 3),
                              rm_plus_code(1, 3),
                              family3_code(3, 2, ms(3, "x0x1")).code,
                              lift_code(rm_code(1, 2), 3),
                              lift_code(rm_code(2, 2), 3),
                              code_from_information_set(PolarSpec(3, {3, 5, 6, 7})),
                              code_from_monomials(ms(3, "x0+x1x2")),
                              BinaryCode::from_generators(3, {EvalVector::parse("11010000"),
                                                              EvalVector::parse("01101000")})};
  return out;
}

}  // namespace

TEST_CASE("exhaustive search orders", "[search]") {
  CHECK(exhaustive_group(rm_code(1, 3)).order == 1344);
  CHECK(exhaustive_group(lift_code(rm_code(1, 2), 3)).order == 384);
  CHECK(exhaustive_group(code_from_information_set(PolarSpec(2, {0, 1, 2, 3}))).order == 24);
  CHECK(exhaustive_group(code_from_monomials(ms(1, "x0"))).order == 1);
  CHECK(exhaustive_group(code_from_monomials(ms(1, "1"))).order == 2);
}

TEST_CASE("exhaustive search against a brute-force count", "[search]") {
  for (const auto& c : length8_corpus()) {
    auto res = exhaustive_group(c);
    CHECK(res.order == oracle::automorphism_count(8, generator_words(c)));
    CHECK(res.method == SearchMethod::exhaustive);
    for (const auto& g : res.generators) CHECK(is_automorphism(c, g));
  }
}

TEST_CASE("backtracking agrees with exhaustive search at length 8", "[search]") {
  for (const auto& c : length8_corpus()) {
    auto ex = exhaustive_group(c);
    auto bt = backtrack_group(c);
    CHECK(bt.order == ex.order);
    CHECK(bt.method == SearchMethod::backtrack);
    REQUIRE(bt.partition.has_value());
    if (!bt.generators.empty()) CHECK(group_order(bt.generators).order() == bt.order);
    for (const auto& g : bt.generators) CHECK(is_automorphism(c, g));
    CHECK(BigInt(40320) % bt.order == 0);
  }
}

TEST_CASE("backtracking at length 16", "[search]") {
  auto f = backtrack_group(family3_code(4, 2, ms(4, "x0x1")).code);
  CHECK(f.order == 36864);
  CHECK(backtrack_group(rm_code(1, 4)).order == 322560);
  auto rep = backtrack_group(code_from_monomials(ms(4, "1")));
  CHECK(to_decimal(rep.order) == "20922789888000");
  CHECK(backtrack_group(rm_code(4, 4)).order == rep.order);
  CHECK(backtrack_group(rm_code(2, 4)).order == 322560);
  CHECK(backtrack_group(rm_code(3, 4)).order == rep.order);
}

TEST_CASE("search results are deterministic across job counts", "[search]") {
  auto c = lift_code(rm_code(1, 2), 3);
  auto one = exhaustive_group(c, 1);
  for (unsigned jobs : {2u, 5u}) {
    auto many = exhaustive_group(c, jobs);
    CHECK(many.order == one.order);
    CHECK(many.generators == one.generators);
  }
  CHECK(search_result_to_json(backtrack_group(rm_code(1, 4))).dump() ==
        search_result_to_json(backtrack_group(rm_code(1, 4))).dump());
}

TEST_CASE("found groups are closed under products and inverses", "[search][property]") {
  std::mt19937 rng(11);
  for (const auto& c : length8_corpus()) {
    auto res = backtrack_group(c);
    if (res.generators.empty()) continue;
    auto chain = res.chain();
    std::uniform_int_distribution<std::size_t> pick(0, res.generators.size() - 1);
    for (int t = 0; t < 30; ++t) {
      Permutation p = res.generators[pick(rng)];
      for (int s = 0; s < 4; ++s) p = compose(p, inverse(res.generators[pick(rng)]));
      CHECK(chain.contains(p));
      CHECK(is_automorphism(c, p));
    }
  }
}

TEST_CASE("every element of a length-8 group is an automorphism", "[search][property]") {
  for (const auto& c : length8_corpus()) {
    auto res = exhaustive_group(c);
    if (res.generators.empty()) continue;
    std::size_t count = 0;
    bool all = true;
    res.chain().for_each_element([&](const Permutation& p) {
      ++count;
      all = all && is_automorphism(c, p);
    });
    CHECK(all);
    CHECK(BigInt(count) == res.order);
  }
}

TEST_CASE("search input limits", "[search]") {
  CHECK_THROWS_AS(exhaustive_group(rm_code(1, 4)), Error);
  CHECK_THROWS_AS(backtrack_group(rm_code(1, 5)), Error);
}
