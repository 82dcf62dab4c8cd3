#pragma once

#include <stdexcept>

namespace scf {

/// Arguments violate a documented precondition or type invariant.
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The request exceeds a configured engine limit (orbit rank cap,
/// unsupported embedding, no witness possible). Kept distinct from
/// invalid_input so callers can map the two to different exit codes.
struct refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace scf
