#pragma once

#include <stdexcept>
#include <string>

namespace iup {

// Thrown when a parameter set violates one of its physical invariants.
// The message names the first violated invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on config-file problems (syntax, unknown keys, bad units).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an iterative numerical procedure fails to converge
// (quadrature refinement, fringe fit).
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace iup
