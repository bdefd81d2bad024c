#pragma once

#include <stdexcept>

namespace regembed {

// Bad input: malformed files, contract violations, mismatched dimensions.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input exceeds a configured enumeration or size cap.
struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace regembed
