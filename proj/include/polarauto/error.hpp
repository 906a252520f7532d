#pragma once

#include <stdexcept>
#include <string>

namespace polarauto {

/// Raised for every violated precondition of a library operation
/// (bad parameters, malformed text, mismatched lengths or degrees).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

}  // namespace polarauto
