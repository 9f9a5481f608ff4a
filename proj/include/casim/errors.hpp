#pragma once

#include <stdexcept>
#include <string>

namespace casim {

// Bad physical or numerical parameter (non-positive spring constant, ...).
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation outside a model's valid range.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed input file; message names the offending row/key.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// API misuse: non-uniform grid, length not a power of two, ...
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// Iteration failed to converge; message carries diagnostics.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagree.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive step size underflowed; message carries the state dump.
struct StiffFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// g(x) = 0 had more than the two physical roots (corrupt force table).
struct MultiRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace casim
