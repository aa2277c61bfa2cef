#include "deadoil/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include "deadoil/config.hpp"
#include "deadoil/io.hpp"
#include "deadoil/profiles.hpp"

namespace deadoil {

namespace {

using nlohmann::json;

void write_json(const std::filesystem::path& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << doc.dump(2) << '\n';
}

void write_error(const std::filesystem::path& dir, const char* kind, int code, const std::string& message,
                 const json& extra = json::object()) {
    json doc = {{"error", kind}, {"exit_code", code}, {"message", message}};
    for (const auto& [k, v] : extra.items()) doc[k] = v;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(dir / "error.json");
    out << doc.dump() << '\n';
    std::cerr << "error: " << message << '\n';
}

json violations_json(const ValidationReport& report) { return to_json(report)["violations"]; }

void write_state(const std::filesystem::path& dir, const StateSolution& state, const CostBreakdown& cost) {
    write_field_csv(dir / "u.csv", state.u);
    write_field_csv(dir / "p.csv", state.p);
    write_json(dir / "cost.json", to_json(cost));
}

int run_forward(const ProblemBundle& b, const std::filesystem::path& dir) {
    const Evaluation ev = evaluate(b.problem, b.f);
    write_state(dir, ev.state, ev.cost);
    return kExitOk;
}

int run_adjoint(const ProblemBundle& b, const std::filesystem::path& dir) {
    const GradientEvaluation ge = evaluate_gradient(b.problem, b.f);
    write_state(dir, ge.state, ge.cost);
    write_field_csv(dir / "e1.csv", ge.adjoint.e1);
    write_field_csv(dir / "p1.csv", ge.adjoint.p1);
    return kExitOk;
}

int run_gradcheck(const ProblemBundle& b, const CommandFlags& flags, const std::filesystem::path& dir) {
    const ProfileSpec spec = parse_profile(flags.direction);
    const SpaceTimeField h = eval_profile_qt(spec, b.problem.disc);
    const auto rows = gradient_check(b.problem, b.f, h, flags.eps);

    std::ofstream csv(dir / "gradcheck.csv");
    if (!csv) throw ConfigError("cannot write gradcheck.csv");
    write_gradcheck_csv(csv, rows);

    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.rel_error);
    json doc = {{"direction", spec.text()}, {"max_rel_error", worst}, {"eps", flags.eps}};
    if (spec.name == "random") doc["seed"] = static_cast<std::uint64_t>(spec.params[0]);
    write_json(dir / "gradcheck.json", doc);

    if (flags.assert_tol && worst > *flags.assert_tol) {
        write_error(dir, "threshold", kExitThreshold,
                    "gradcheck max rel_error " + format_double(worst) + " exceeds " + format_double(*flags.assert_tol));
        return kExitThreshold;
    }
    return kExitOk;
}

int run_optimize(const ProblemBundle& b, const CommandFlags& flags, const std::filesystem::path& dir) {
    const OptimizeResult result = b.optimizer.method == "fixed_point"
                                      ? optimize_fixed_point(b.f, b.problem, b.optimizer.fixed_point)
                                      : optimize_gradient_descent(b.f, b.problem, b.optimizer.descent);
    write_field_csv(dir / "f_star.csv", result.f);

    const GradientEvaluation ge = evaluate_gradient(b.problem, result.f);
    const double optimality = lp_norm_qt(ge.gradient.g, 2.0);
    json doc = to_json(result.report);
    doc["final"] = {{"cost", to_json(ge.cost)},
                    {"check_optimality", optimality},
                    {"p1_norm", lp_norm_qt(ge.adjoint.p1, 2.0)}};
    write_json(dir / "report.json", doc);

    if (flags.assert_tol && optimality > *flags.assert_tol) {
        write_error(dir, "threshold", kExitThreshold,
                    "optimality residual " + format_double(optimality) + " exceeds " + format_double(*flags.assert_tol));
        return kExitThreshold;
    }
    return kExitOk;
}

}  // namespace

int run_command(const std::string& command, const std::filesystem::path& config, const CommandFlags& flags) {
    static const std::vector<std::string> commands = {"forward", "adjoint", "gradcheck", "optimize",
                                                      "validate-coeffs"};
    std::filesystem::path dir = flags.out_dir.value_or(".");
    if (std::find(commands.begin(), commands.end(), command) == commands.end()) {
        write_error(dir, "config_error", kExitConfig, "unknown command '" + command + "'");
        return kExitConfig;
    }

    std::optional<ProblemBundle> bundle;
    try {
        bundle.emplace(parse_config(config));
    } catch (const ValidationError& e) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (command == "validate-coeffs") write_json(dir / "validation.json", to_json(e.report()));
        write_error(dir, "validation_error", kExitConfig, e.what(), {{"violations", violations_json(e.report())}});
        return kExitConfig;
    } catch (const ConfigError& e) {
        write_error(dir, "config_error", kExitConfig, e.what());
        return kExitConfig;
    } catch (const SolverError& e) {
        write_error(dir, "solver_error", kExitSolver, e.what());
        return kExitSolver;
    }

    if (!flags.out_dir) dir = bundle->output_dir;
    try {
        std::filesystem::create_directories(dir);
        if (command == "validate-coeffs") {
            write_json(dir / "validation.json", to_json(bundle->validation));
            return kExitOk;
        }
        if (command == "forward") return run_forward(*bundle, dir);
        if (command == "adjoint") return run_adjoint(*bundle, dir);
        if (command == "gradcheck") return run_gradcheck(*bundle, flags, dir);
        return run_optimize(*bundle, flags, dir);
    } catch (const SolverError& e) {
        json extra = {{"residual", e.residual()}};
        if (e.time_level() >= 0) extra["time_level"] = e.time_level();
        write_error(dir, "solver_error", kExitSolver, e.what(), extra);
        return kExitSolver;
    } catch (const ConfigError& e) {
        write_error(dir, "config_error", kExitConfig, e.what());
        return kExitConfig;
    } catch (const std::filesystem::filesystem_error& e) {
        write_error(dir, "config_error", kExitConfig, e.what());
        return kExitConfig;
    }
}

}  // namespace deadoil
