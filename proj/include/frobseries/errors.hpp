#pragma once

#include <stdexcept>
#include <string>

namespace frobseries {

// Precondition and contract violations are std::invalid_argument; the CLI
// maps them to a usage error.

// Operands live in different coefficient rings.
class ring_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operands carry different truncation orders.
class truncation_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured resource guard (enumeration size,
// expansion order, primality cap).
class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A series provider returned fewer coefficients than a check requires.
class truncation_shortfall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace frobseries
