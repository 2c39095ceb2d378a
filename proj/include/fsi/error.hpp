#pragma once

#include <stdexcept>
#include <string>

namespace fsi {

// Malformed user input: bad files, unknown presets, cap exceeded.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant that the theory guarantees did not hold. Always a bug or
// corrupted input that slipped past validation.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fsi
