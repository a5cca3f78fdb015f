#pragma once

#include <stdexcept>
#include <string>

namespace jcd {

/// Invalid configuration or precondition violation (maps to CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical validity guard tripped: small perturbative denominator,
/// truncation cap exceeded, integrator norm drift (CLI exit code 3).
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace jcd
