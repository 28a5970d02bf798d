#pragma once

#include <stdexcept>
#include <string>

namespace l2zeta {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: malformed files, unknown vertices, contract violations by the caller.
struct validation_error : error {
    using error::error;
};

// Failures of the numeric machinery: degenerate evaluation points, tracking
// ambiguity, singular integrands.
struct numeric_error : error {
    using error::error;
};

}  // namespace l2zeta
