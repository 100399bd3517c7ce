#pragma once

#include <stdexcept>
#include <string>

namespace surfcore {

/// Malformed input: unknown vertex, graph mismatch, schema violation.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check that a theorem guarantees has failed.
/// Never caught and corrected silently.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace surfcore
