#pragma once

#include <stdexcept>
#include <string>

namespace kpm {

// Input that violates a documented precondition (bad shape, mixed scalar
// rings, unparsable file). CLI maps this to exit code 2.
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Singular matrix where an invertible one is required.
struct SingularInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncation order too small for the requested computation; retry larger.
struct TruncationTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Monad data failing nondegeneracy where an operation requires it.
struct DegenerateData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Randomized generator could not produce a valid sample within its budget.
struct GeneratorExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kpm
