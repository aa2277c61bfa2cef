#include "deadoil/profiles.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "deadoil/error.hpp"

namespace deadoil {

namespace {

constexpr double pi = std::numbers::pi;

const std::map<std::string, std::size_t, std::less<>>& space_arity() {
    static const std::map<std::string, std::size_t, std::less<>> arity = {
        {"zero", 0}, {"constant", 1}, {"sinprod", 1}, {"polyprod", 1}, {"bump", 4}, {"random", 1},
    };
    return arity;
}

const std::map<std::string, std::size_t, std::less<>>& time_arity() {
    static const std::map<std::string, std::size_t, std::less<>> arity = {
        {"tconst", 0}, {"tsin", 1}, {"tcos", 1}, {"texp", 1}, {"tlin", 2},
    };
    return arity;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view token, std::string_view context) {
    const std::string text(trim(token));
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size() || !std::isfinite(value)) {
        throw ConfigError("profile '" + std::string(context) + "': bad number '" + text + "'");
    }
    return value;
}

// "name(a, b, c)" -> name, params
std::pair<std::string, std::vector<double>> parse_call(std::string_view expr) {
    expr = trim(expr);
    const auto open = expr.find('(');
    if (open == std::string_view::npos || expr.back() != ')') {
        throw ConfigError("profile '" + std::string(expr) + "': expected name(params)");
    }
    std::string name(trim(expr.substr(0, open)));
    std::string_view inside = trim(expr.substr(open + 1, expr.size() - open - 2));
    std::vector<double> params;
    while (!inside.empty()) {
        const auto comma = inside.find(',');
        params.push_back(parse_number(inside.substr(0, comma), expr));
        if (comma == std::string_view::npos) break;
        inside = inside.substr(comma + 1);
        if (trim(inside).empty()) {
            throw ConfigError("profile '" + std::string(expr) + "': trailing comma");
        }
    }
    return {std::move(name), std::move(params)};
}

void write_call(std::ostringstream& out, const std::string& name, const std::vector<double>& params) {
    out << name << '(';
    out.precision(17);
    for (std::size_t k = 0; k < params.size(); ++k) out << (k ? "," : "") << params[k];
    out << ')';
}

double space_value(const ProfileSpec& spec, double x, double y) {
    const auto& p = spec.params;
    if (spec.name == "zero") return 0.0;
    if (spec.name == "constant") return p[0];
    if (spec.name == "sinprod") return p[0] * std::sin(pi * x) * std::sin(pi * y);
    if (spec.name == "polyprod") return p[0] * x * (1.0 - x) * y * (1.0 - y);
    if (spec.name == "bump") {
        const double r2 = p[3] * p[3];
        const double rho2 = (x - p[1]) * (x - p[1]) + (y - p[2]) * (y - p[2]);
        return rho2 < r2 ? p[0] * std::exp(1.0 - r2 / (r2 - rho2)) : 0.0;
    }
    throw ConfigError("unknown profile '" + spec.name + "'");
}

}  // namespace

double TimeFactor::operator()(double t, double T) const {
    if (name == "tconst") return 1.0;
    if (name == "tsin") return std::sin(params[0] * pi * t / T);
    if (name == "tcos") return std::cos(params[0] * pi * t / T);
    if (name == "texp") return std::exp(params[0] * t);
    if (name == "tlin") return params[0] + params[1] * t;
    throw ConfigError("unknown time factor '" + name + "'");
}

std::string ProfileSpec::text() const {
    std::ostringstream out;
    write_call(out, name, params);
    if (time.name != "tconst") {
        out << '*';
        write_call(out, time.name, time.params);
    }
    return out.str();
}

ProfileSpec parse_profile(std::string_view expr) {
    expr = trim(expr);
    // The '*' separating space and time parts is the first one after the
    // closing parenthesis of the spatial call.
    const auto close = expr.find(')');
    const auto star = close == std::string_view::npos ? std::string_view::npos : expr.find('*', close);

    ProfileSpec spec;
    auto [name, params] = parse_call(expr.substr(0, star));
    const auto arity = space_arity().find(name);
    if (arity == space_arity().end()) {
        throw ConfigError("unknown profile '" + name + "'");
    }
    if (params.size() != arity->second) {
        throw ConfigError("profile '" + name + "' expects " + std::to_string(arity->second) + " parameter(s), got " +
                          std::to_string(params.size()));
    }
    if (name == "bump" && !(params[3] > 0.0)) {
        throw ConfigError("profile 'bump': radius must be positive");
    }
    spec.name = std::move(name);
    spec.params = std::move(params);

    if (star != std::string_view::npos) {
        auto [tname, tparams] = parse_call(expr.substr(star + 1));
        const auto tarity = time_arity().find(tname);
        if (tarity == time_arity().end()) {
            throw ConfigError("unknown time factor '" + tname + "'");
        }
        if (tparams.size() != tarity->second) {
            throw ConfigError("time factor '" + tname + "' expects " + std::to_string(tarity->second) +
                              " parameter(s), got " + std::to_string(tparams.size()));
        }
        spec.time = TimeFactor{std::move(tname), std::move(tparams)};
    }
    return spec;
}

bool vanishes_on_boundary(const ProfileSpec& spec) { return spec.name != "constant" || spec.params[0] == 0.0; }

ScalarField eval_profile(const ProfileSpec& spec, const Discretization& disc, double t) {
    if (spec.name == "random") {
        const int n = static_cast<int>(std::lround(t / disc.dt()));
        if (std::abs(n * disc.dt() - t) > 1e-12 * disc.T() || n < 0 || n > disc.nt()) {
            throw ConfigError("profile 'random' can only be sampled at time levels");
        }
        return smooth_random_field(disc, static_cast<std::uint64_t>(spec.params[0]))[n];
    }
    const double tf = spec.time(t, disc.T());
    ScalarField out(disc);
    for (int j = 0; j < disc.ny(); ++j) {
        for (int i = 0; i < disc.nx(); ++i) out.at(i, j) = tf * space_value(spec, disc.x(i), disc.y(j));
    }
    return out;
}

SpaceTimeField eval_profile_qt(const ProfileSpec& spec, const Discretization& disc) {
    if (spec.name == "random") {
        SpaceTimeField out = smooth_random_field(disc, static_cast<std::uint64_t>(spec.params[0]));
        if (spec.time.name != "tconst") {
            for (int n = 0; n <= disc.nt(); ++n) out[n] *= spec.time(disc.t(n), disc.T());
        }
        return out;
    }
    SpaceTimeField out(disc);
    for (int n = 0; n <= disc.nt(); ++n) out[n] = eval_profile(spec, disc, disc.t(n));
    return out;
}

SpaceTimeField smooth_random_field(const Discretization& disc, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    double c[3][3][3];
    for (auto& a : c)
        for (auto& b : a)
            for (double& v : b) v = coeff(rng);

    SpaceTimeField out(disc);
    for (int n = 0; n <= disc.nt(); ++n) {
        const double t = disc.t(n);
        for (int j = 0; j < disc.ny(); ++j) {
            for (int i = 0; i < disc.nx(); ++i) {
                double v = 0.0;
                for (int k = 1; k <= 3; ++k)
                    for (int l = 1; l <= 3; ++l)
                        for (int m = 0; m < 3; ++m)
                            v += c[k - 1][l - 1][m] / (k * l * (m + 1)) * std::sin(k * pi * disc.x(i)) *
                                 std::sin(l * pi * disc.y(j)) * std::cos(m * pi * t / disc.T());
                out[n].at(i, j) = v;
            }
        }
    }
    return out;
}

}  // namespace deadoil
