#pragma once

#include <stdexcept>
#include <string>

namespace cyclicpoly {

// Thrown when a (v, d) pair violates d >= 2 or v >= d + 1.
class params_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a face enumeration would exceed the configured vertex cap.
// Callers that own a cap flag should mention it in their diagnostics.
class cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cyclicpoly
