#pragma once

#include <stdexcept>
#include <string>

namespace entfid {

/// Thrown when an input violates a documented invariant (dimension mismatch,
/// non-Hermitian matrix, parameter out of range, ...). The message names the
/// violated invariant.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entfid
