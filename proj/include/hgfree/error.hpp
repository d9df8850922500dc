#pragma once

#include <stdexcept>
#include <string>

namespace hgfree {

/// Raised when an input tuple violates the admissible parameter space.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an identity that must hold for every admissible input fails.
/// This is a programming error or a genuine counterexample, never bad input.
class InternalInvariant : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require_invariant(bool cond, const std::string& what) {
  if (!cond) throw InternalInvariant(what);
}

}  // namespace hgfree
