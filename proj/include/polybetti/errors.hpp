#pragma once

#include <stdexcept>
#include <string>

namespace polybetti {

// Thrown when a configurable resource limit (closure size, degree horizon,
// enumeration bound) is hit.  Callers surface this as exit code 3.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace polybetti
