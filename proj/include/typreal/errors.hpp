#pragma once

#include <stdexcept>

namespace typreal {

// Convergence failure or violated internal consistency check. Distinct from
// std::invalid_argument / std::domain_error (caller errors): a NumericError
// means the numerics themselves gave up.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace typreal
