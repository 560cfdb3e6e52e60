#pragma once

#include <stdexcept>

namespace prismdom {

// Refusal to run past a configured size cap (exhaustive permutation
// enumeration, subset-enumeration oracle).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace prismdom
