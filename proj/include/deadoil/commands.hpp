#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace deadoil {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 1,
    kExitSolver = 2,
    kExitThreshold = 3,
};

struct CommandFlags {
    std::vector<double> eps = {1e-2, 1e-3, 1e-4};
    /// Profile expression for the gradcheck direction. `random(<seed>)` draws
    /// a seeded smooth field; the seed is recorded in gradcheck.json.
    std::string direction = "sinprod(1)*tsin(1)";
    std::optional<double> assert_tol;
    /// Overrides [output] dir. Also where error.json goes when the config
    /// cannot be parsed (current directory otherwise).
    std::optional<std::filesystem::path> out_dir;
};

/// Runs one of forward, adjoint, gradcheck, optimize, validate-coeffs on the
/// configuration at `config`, writing artifacts (or error.json) and returning
/// the process exit code.
int run_command(const std::string& command, const std::filesystem::path& config, const CommandFlags& flags);

}  // namespace deadoil
