#pragma once

#include <cstdint>
#include <vector>

#include "polarauto/polarauto.hpp"

namespace testing_helpers {

inline std::vector<std::uint64_t> generator_words(const polarauto::BinaryCode& c) {
  std::vector<std::uint64_t> out;
  for (const auto& g : c.generators()) out.push_back(g.word());
  return out;
}

inline polarauto::MonomialSet ms(int n, const char* text) { return polarauto::MonomialSet::parse(n, text); }

}  // namespace testing_helpers
