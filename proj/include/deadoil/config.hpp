#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "deadoil/coefficients.hpp"
#include "deadoil/control.hpp"
#include "deadoil/error.hpp"
#include "deadoil/optimizer.hpp"

namespace deadoil {

struct OptimizerSettings {
    std::string method = "gradient_descent";  // or "fixed_point"
    GradientDescentOptions descent;
    FixedPointOptions fixed_point;
};

/// Parsed and validated run configuration.
struct ProblemBundle {
    Problem problem;
    SpaceTimeField f;  // control evaluated by forward/adjoint/gradcheck, start of optimize
    OptimizerSettings optimizer;
    std::filesystem::path output_dir;
    ValidationReport validation;
    /// Source text of every [data] entry, e.g. {"U", "sinprod(0.5)*tcos(1)"}.
    std::map<std::string, std::string> data_sources;
};

/// Coefficient validation failed; carries the full report.
class ValidationError : public ConfigError {
public:
    ValidationError(const std::string& what, ValidationReport report)
        : ConfigError(what), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Parses an INI-style run configuration:
///
///   version = 1
///   [grid]          nx, ny, nt, T
///   [coefficients]  phi, g, d           e.g. smoothstep(1, 0.5)
///   [penalty]       beta1, beta2, q0
///   [data]          u0, p0, U, P [, f]  profile expression or csv:<path>
///   [optimizer]     method, max_iters, grad_tol, armijo_c, shrink, step0,
///                   max_backtracks, damping, tol       (all optional)
///   [validation]    range, samples, c1, c2, c3         (all optional)
///   [output]        dir                                (optional)
///
/// `csv:` paths are relative to `base_dir`. Unknown or duplicate keys,
/// missing required keys and unparsable values throw ConfigError; failed
/// hypothesis validation throws ValidationError.
ProblemBundle parse_config_text(std::string_view text, const std::filesystem::path& base_dir);
ProblemBundle parse_config(const std::filesystem::path& path);

}  // namespace deadoil
