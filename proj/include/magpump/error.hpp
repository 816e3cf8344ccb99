#pragma once

#include <stdexcept>
#include <string>

namespace magpump {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the physical inputs was violated (no propagating lead
/// mode, out-of-range coupling, invalid cycle, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The inputs are formally valid but the requested quantity is singular at
/// that point (exact band edge in a plane-wave basis, decoupled probe, ...).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// A scattering-matrix provider returned something that is not unitary or a
/// finite-difference step collapsed.
class ProviderError : public Error {
public:
    using Error::Error;
};

/// Periodic quadrature failed to reach the requested tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, int nodes, double change, double tolerance)
        : Error(what), nodes_(nodes), change_(change), tolerance_(tolerance) {}

    int nodes() const noexcept { return nodes_; }
    double change() const noexcept { return change_; }
    double tolerance() const noexcept { return tolerance_; }

private:
    int nodes_;
    double change_;
    double tolerance_;
};

/// Malformed run configuration or CLI input.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace magpump
