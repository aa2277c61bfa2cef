// Command-line driver: deadoil <command> --config <file> [options]

#include <CLI11.hpp>

#include "deadoil/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Adjoint-based optimal control of the dead oil isotherm system"};
    app.require_subcommand(1);

    std::string config;
    deadoil::CommandFlags flags;
    std::string out_dir;
    double assert_tol = 0.0;

    for (const char* name : {"forward", "adjoint", "gradcheck", "optimize", "validate-coeffs"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("-c,--config", config, "Run configuration (INI)")->required();
        sub->add_option("-o,--out", out_dir, "Output directory (overrides [output] dir)");
        sub->add_option("--assert-tol", assert_tol, "Exit with code 3 when the check exceeds this threshold");
        if (std::string(name) == "gradcheck") {
            sub->add_option("--eps", flags.eps, "Finite-difference step sizes")->delimiter(',')->capture_default_str();
            sub->add_option("--direction", flags.direction, "Direction profile, e.g. random(7)")->capture_default_str();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : deadoil::kExitConfig;
    }

    auto* sub = app.get_subcommands().front();
    if (!out_dir.empty()) flags.out_dir = out_dir;
    if (sub->count("--assert-tol") > 0) flags.assert_tol = assert_tol;
    return deadoil::run_command(sub->get_name(), config, flags);
}
