#pragma once

#include <stdexcept>

namespace actinwire {

/// Invalid user-supplied parameter, option or configuration value.
/// The CLI maps this to exit code 2.
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but outside the model's domain, e.g. a circuit that
/// is not overdamped. The CLI maps this to exit code 3.
class model_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace actinwire
