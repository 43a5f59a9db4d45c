#pragma once

#include <stdexcept>
#include <string>

namespace ymlab {

// Bad arguments / bad configuration: CLI exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical blow-up detected during time stepping: CLI exit code 2.
struct InstabilityError : std::runtime_error {
    explicit InstabilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ymlab
