#pragma once

#include <stdexcept>
#include <string>

namespace wep4 {

// Evaluation at the excluded point w = 0 of data with negative exponents.
struct PunctureError : std::domain_error {
    using std::domain_error::domain_error;
};

// Antiderivative of a w^-1 term would need a logarithm.
struct LogarithmicTermError : std::domain_error {
    using std::domain_error::domain_error;
};

// Parameters outside the family's admissible set (even m or n, lambda = +-i where inverted, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Quantity undefined at a branch point or where E vanishes.
struct NonRegularPointError : std::domain_error {
    using std::domain_error::domain_error;
};

// The frame vectors do not span R^4, or a displayed formula divides by ~0.
struct DegenerateFrameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller asked for something the interface does not support (4D mesh to OBJ, bad CLI input).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace wep4
