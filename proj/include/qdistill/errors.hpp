#pragma once

#include <stdexcept>
#include <string>

namespace qdistill {

// Error conditions raised by the library. All derive from std::runtime_error
// (or std::invalid_argument for precondition violations) so callers can catch
// broadly or by specific condition.

struct NotPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoInverse : std::domain_error {
    using std::domain_error::domain_error;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidGenerator : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct StructureViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidBlock : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidMixture : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ImpossiblePostselection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qdistill
