#pragma once

#include <stdexcept>
#include <string>

namespace deadoil {

/// Bad input: malformed config, unknown profile, mismatched grids, failed
/// hypothesis validation. Maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative solver (CG, Newton) did not reach its tolerance. Maps to CLI
/// exit code 2.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double residual, int time_level = -1)
        : std::runtime_error(what), residual_(residual), time_level_(time_level) {}

    double residual() const { return residual_; }
    /// Time level at which the failure happened, -1 when not time-stepped.
    int time_level() const { return time_level_; }

private:
    double residual_;
    int time_level_;
};

}  // namespace deadoil
