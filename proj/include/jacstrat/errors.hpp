#pragma once

#include <stdexcept>

namespace jacstrat {

// Input failed schema or semantic validation.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A degree vector does not sum to the required total. Kept separate from
// plain validation failures so callers can report it as its own class.
struct SumMismatchError : ValidationError {
  using ValidationError::ValidationError;
};

// An enumeration would exceed the configured size cap.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cross-checked internal invariant failed. Never expected to fire.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace jacstrat
