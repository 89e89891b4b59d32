#pragma once

#include <stdexcept>
#include <string>

namespace lacunae {

/// Malformed input: bad word grammar, rank mismatch, schema violation.
/// CLI exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Order comparison gave up at the configured truncation depth.
/// CLI exit code 3.
struct UndecidedOrderError : std::runtime_error {
    UndecidedOrderError(std::string msg, int depth)
        : std::runtime_error(std::move(msg)), depth(depth) {}
    int depth;
};

/// Ball / support / matrix growth exceeded the configured budget.
/// CLI exit code 3.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterative estimator stopped before reaching its tolerance; carries
/// the last iterate so callers can still inspect it.  CLI exit code 3.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(std::string msg, double last)
        : std::runtime_error(std::move(msg)), last_estimate(last) {}
    double last_estimate;
};

/// A certified-positive operand produced eigenvalues below -tolerance.
struct PositivityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lacunae
