#pragma once

#include <stdexcept>

namespace arithspin {

/// An internal consistency check failed (a bug, not bad input): a residual
/// pi power in an assembly, a sweep pair with inconsistent invariants, etc.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace arithspin
