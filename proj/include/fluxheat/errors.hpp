#pragma once

#include <stdexcept>
#include <string>

namespace fluxheat {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid device parameters, config keys/values, or out-of-domain arguments.
class ParamError : public Error {
public:
    explicit ParamError(const std::string& msg) : Error(msg) {}
};

// Closed-form path asked for a configuration it does not cover.
class UnsupportedConfigError : public Error {
public:
    explicit UnsupportedConfigError(const std::string& msg) : Error(msg) {}
};

// No unique steady state (all rates zero or disconnected rate graph).
class DegenerateSystemError : public Error {
public:
    explicit DegenerateSystemError(const std::string& msg) : Error(msg) {}
};

// Iterative solver failed to converge; carries the last residual.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double residual)
        : Error(msg), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// Malformed or insufficient input data (calibration files, etc.).
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

}  // namespace fluxheat
