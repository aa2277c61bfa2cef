#include "deadoil/io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "deadoil/error.hpp"

namespace deadoil {

namespace {

constexpr const char* kFieldHeader = "t,x,y,value";

void write_level(std::ostream& out, const ScalarField& field, double t) {
    const Discretization& d = field.disc();
    const std::string ts = format_double(t);
    for (int j = 0; j < d.ny(); ++j) {
        for (int i = 0; i < d.nx(); ++i) {
            out << ts << ',' << format_double(d.x(i)) << ',' << format_double(d.y(j)) << ','
                << format_double(field.at(i, j)) << '\n';
        }
    }
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read '" + path.string() + "'");
    return in;
}

double parse_csv_number(const std::string& token, std::size_t line) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (token.empty() || end != begin + token.size()) {
        throw ConfigError("field csv line " + std::to_string(line) + ": bad number '" + token + "'");
    }
    return v;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(b)); }

// Reads `levels` time levels starting at level 0.
std::vector<ScalarField> read_levels(std::istream& in, const Discretization& d, int levels) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("field csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kFieldHeader) throw ConfigError("field csv: expected header '" + std::string(kFieldHeader) + "'");

    std::vector<ScalarField> out(levels, ScalarField(d));
    const std::size_t expected = static_cast<std::size_t>(levels) * d.nodes();
    std::size_t row = 0;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (row >= expected) {
            throw ConfigError("field csv: more than " + std::to_string(expected) + " rows");
        }
        std::array<std::string, 4> cols;
        std::stringstream ss(line);
        for (auto& c : cols) {
            if (!std::getline(ss, c, ',')) throw ConfigError("field csv line " + std::to_string(line_no) + ": expected 4 columns");
        }
        std::string extra;
        if (std::getline(ss, extra)) throw ConfigError("field csv line " + std::to_string(line_no) + ": expected 4 columns");

        const int n = static_cast<int>(row / d.nodes());
        const std::size_t k = row % d.nodes();
        const int i = static_cast<int>(k % d.nx());
        const int j = static_cast<int>(k / d.nx());
        const double t = parse_csv_number(cols[0], line_no);
        const double x = parse_csv_number(cols[1], line_no);
        const double y = parse_csv_number(cols[2], line_no);
        if (!close(t, d.t(n)) || !close(x, d.x(i)) || !close(y, d.y(j))) {
            throw ConfigError("field csv line " + std::to_string(line_no) + ": coordinates do not match the grid");
        }
        out[n][k] = parse_csv_number(cols[3], line_no);
        ++row;
    }
    if (row != expected) {
        throw ConfigError("field csv: expected " + std::to_string(expected) + " rows, got " + std::to_string(row));
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_field_csv(std::ostream& out, const SpaceTimeField& field) {
    out << kFieldHeader << '\n';
    for (int n = 0; n < field.levels(); ++n) write_level(out, field[n], field.disc().t(n));
}

void write_field_csv(std::ostream& out, const ScalarField& field, double t) {
    out << kFieldHeader << '\n';
    write_level(out, field, t);
}

void write_field_csv(const std::filesystem::path& path, const SpaceTimeField& field) {
    auto out = open_out(path);
    write_field_csv(out, field);
}

void write_field_csv(const std::filesystem::path& path, const ScalarField& field, double t) {
    auto out = open_out(path);
    write_field_csv(out, field, t);
}

SpaceTimeField read_field_csv(std::istream& in, const Discretization& disc) {
    auto levels = read_levels(in, disc, disc.nt() + 1);
    SpaceTimeField out(disc);
    for (int n = 0; n <= disc.nt(); ++n) out[n] = std::move(levels[n]);
    return out;
}

SpaceTimeField read_field_csv(const std::filesystem::path& path, const Discretization& disc) {
    auto in = open_in(path);
    return read_field_csv(in, disc);
}

ScalarField read_scalar_csv(std::istream& in, const Discretization& disc) {
    return std::move(read_levels(in, disc, 1).front());
}

ScalarField read_scalar_csv(const std::filesystem::path& path, const Discretization& disc) {
    auto in = open_in(path);
    return read_scalar_csv(in, disc);
}

void write_gradcheck_csv(std::ostream& out, const std::vector<GradcheckRow>& rows) {
    out << "eps,fd_value,adjoint_value,rel_error\n";
    for (const auto& r : rows) {
        out << format_double(r.eps) << ',' << format_double(r.fd_value) << ',' << format_double(r.adjoint_value)
            << ',' << format_double(r.rel_error) << '\n';
    }
}

nlohmann::json to_json(const CostBreakdown& cost) {
    return {{"misfit_u", cost.misfit_u},
            {"misfit_p", cost.misfit_p},
            {"penalty_f", cost.penalty_f},
            {"penalty_dtf", cost.penalty_dtf},
            {"total", cost.total}};
}

nlohmann::json to_json(const ValidationReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"function", v.function}, {"order", v.order}, {"r", v.r}, {"value", v.value},
                              {"bound", v.bound}});
    }
    return {{"range", report.range},
            {"samples", report.samples},
            {"c1", report.c1},
            {"c2", report.c2},
            {"c3", report.c3},
            {"pass", report.pass},
            {"violations", std::move(violations)}};
}

nlohmann::json to_json(const OptimizeReport& report) {
    nlohmann::json iterations = nlohmann::json::array();
    for (const auto& it : report.iterations) {
        iterations.push_back({{"iter", it.iter},
                              {"cost", to_json(it.cost)},
                              {"grad_norm", it.grad_norm},
                              {"step", it.step},
                              {"optimality_residual", it.optimality_residual}});
    }
    return {{"method", report.method},
            {"converged", report.converged},
            {"reason", to_string(report.reason)},
            {"iterations", std::move(iterations)}};
}

}  // namespace deadoil
