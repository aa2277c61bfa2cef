#include "deadoil/coefficients.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "deadoil/error.hpp"

namespace deadoil {

namespace {

const std::map<std::string, std::size_t, std::less<>>& family_arity() {
    static const std::map<std::string, std::size_t, std::less<>> arity = {
        {"identity", 0}, {"constant", 1}, {"affine", 2}, {"smoothstep", 2}, {"rational", 2}, {"bell", 2},
    };
    return arity;
}

// Derivatives of tanh expressed through t = tanh(x).
double tanh_derivative(int order, double x) {
    const double t = std::tanh(x);
    const double s = 1.0 - t * t;
    switch (order) {
        case 0: return t;
        case 1: return s;
        case 2: return -2.0 * t * s;
        default: return -2.0 * s * (1.0 - 3.0 * t * t);
    }
}

// Derivatives of r / sqrt(1 + r^2).
double algebraic_sigmoid(int order, double r) {
    const double q = 1.0 + r * r;
    switch (order) {
        case 0: return r / std::sqrt(q);
        case 1: return std::pow(q, -1.5);
        case 2: return -3.0 * r * std::pow(q, -2.5);
        default: return (12.0 * r * r - 3.0) * std::pow(q, -3.5);
    }
}

// Derivatives of sech^2(x) = 1 - tanh^2(x), i.e. tanh'(x), so order k of the
// bell is order k+1 of tanh; order 3 needs tanh's fourth derivative.
double sech2_derivative(int order, double x) {
    if (order < 3) return tanh_derivative(order + 1, x);
    const double t = std::tanh(x);
    const double s = 1.0 - t * t;
    return 8.0 * t * s * (2.0 - 3.0 * t * t);
}

}  // namespace

CoefficientFamily::CoefficientFamily(std::string name, std::vector<double> params)
    : name_(std::move(name)), params_(std::move(params)) {
    const auto it = family_arity().find(name_);
    if (it == family_arity().end()) {
        throw ConfigError("unknown coefficient family '" + name_ + "'");
    }
    if (params_.size() != it->second) {
        throw ConfigError("coefficient family '" + name_ + "' expects " + std::to_string(it->second) +
                          " parameter(s), got " + std::to_string(params_.size()));
    }
    for (double p : params_) {
        if (!std::isfinite(p)) throw ConfigError("coefficient family '" + name_ + "': non-finite parameter");
    }
    if (name_ == "bell" && !(params_[1] > 0.0)) {
        throw ConfigError("coefficient family 'bell': width must be positive");
    }
}

CoefficientFamily CoefficientFamily::parse(std::string_view expr) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    expr = trim(expr);
    const auto open = expr.find('(');
    if (open == std::string_view::npos || expr.back() != ')') {
        throw ConfigError("coefficient '" + std::string(expr) + "': expected family(params)");
    }
    std::string name(trim(expr.substr(0, open)));
    std::string_view inside = trim(expr.substr(open + 1, expr.size() - open - 2));
    std::vector<double> params;
    while (!inside.empty()) {
        const auto comma = inside.find(',');
        const std::string token(trim(inside.substr(0, comma)));
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (token.empty() || used != token.size()) {
            throw ConfigError("coefficient '" + std::string(expr) + "': bad number '" + token + "'");
        }
        params.push_back(value);
        if (comma == std::string_view::npos) break;
        inside = inside.substr(comma + 1);
    }
    return CoefficientFamily(std::move(name), std::move(params));
}

std::string CoefficientFamily::text() const {
    std::ostringstream out;
    out.precision(17);
    out << name_ << '(';
    for (std::size_t k = 0; k < params_.size(); ++k) out << (k ? "," : "") << params_[k];
    out << ')';
    return out.str();
}

double CoefficientFamily::eval(int order, double r) const {
    if (order < 0 || order > 3) {
        throw ConfigError("coefficient family '" + name_ + "': derivative order " + std::to_string(order) +
                          " not supported");
    }
    const auto& p = params_;
    if (name_ == "identity") return order == 0 ? r : (order == 1 ? 1.0 : 0.0);
    if (name_ == "constant") return order == 0 ? p[0] : 0.0;
    if (name_ == "affine") return order == 0 ? p[0] + p[1] * r : (order == 1 ? p[1] : 0.0);
    if (name_ == "smoothstep") {
        const double linear = order == 0 ? p[0] * r : (order == 1 ? p[0] : 0.0);
        return linear + p[1] * tanh_derivative(order, r);
    }
    if (name_ == "rational") return (order == 0 ? p[0] : 0.0) + p[1] * algebraic_sigmoid(order, r);
    // bell
    return p[0] * std::pow(1.0 / p[1], order) * sech2_derivative(order, r / p[1]);
}

const char* to_string(Coefficient which) {
    switch (which) {
        case Coefficient::phi: return "phi";
        case Coefficient::g: return "g";
        case Coefficient::d: return "d";
    }
    return "?";
}

CoefficientModel::CoefficientModel(CoefficientFamily phi, CoefficientFamily g, CoefficientFamily d,
                                   HypothesisBounds bounds)
    : phi_(std::move(phi)), g_(std::move(g)), d_(std::move(d)), bounds_(bounds) {}

int CoefficientModel::max_order(Coefficient which) {
    switch (which) {
        case Coefficient::phi: return 3;
        case Coefficient::g: return 2;
        case Coefficient::d: return 1;
    }
    return 0;
}

const CoefficientFamily& CoefficientModel::family(Coefficient which) const {
    switch (which) {
        case Coefficient::phi: return phi_;
        case Coefficient::g: return g_;
        case Coefficient::d: return d_;
    }
    return phi_;
}

double CoefficientModel::eval(Coefficient which, int order, double r) const {
    if (order < 0 || order > max_order(which)) {
        throw ConfigError(std::string("coefficient ") + to_string(which) + ": derivative order " +
                          std::to_string(order) + " is not supported (max " + std::to_string(max_order(which)) + ")");
    }
    return family(which).eval(order, r);
}

ScalarField CoefficientModel::map(Coefficient which, int order, const ScalarField& u) const {
    if (order < 0 || order > max_order(which)) {
        (void)eval(which, order, 0.0);  // throws with the standard message
    }
    const CoefficientFamily& fam = family(which);
    ScalarField out(u.disc());
    for (std::size_t k = 0; k < u.size(); ++k) out[k] = fam.eval(order, u[k]);
    return out;
}

ValidationReport validate_hypotheses(const CoefficientModel& model, double R, int M) {
    if (!(R > 0.0) || M < 2) {
        throw ConfigError("validate_hypotheses: need R > 0 and M >= 2");
    }
    ValidationReport report;
    report.range = R;
    report.samples = M;
    report.c1 = std::numeric_limits<double>::infinity();
    report.c2 = -std::numeric_limits<double>::infinity();
    report.c3 = 0.0;

    const HypothesisBounds& b = model.bounds();
    auto flag = [&](const char* fn, int order, double r, double v, const std::string& bound) {
        report.violations.push_back(Violation{fn, order, r, v, bound});
    };

    for (int k = 0; k < M; ++k) {
        const double r = -R + 2.0 * R * k / (M - 1);
        const double d0 = model.d(0, r);
        const double d1 = model.d(1, r);
        const double p1 = model.phi(1, r);
        const double p2 = model.phi(2, r);
        const double p3 = model.phi(3, r);

        report.c1 = std::min({report.c1, d0, p1});
        report.c2 = std::max(report.c2, p1);
        report.c3 = std::max({report.c3, std::abs(d1), std::abs(p1), std::abs(p2), std::abs(p3)});

        if (!(d0 > 0.0)) flag("d", 0, r, d0, "d(r) >= c1 > 0");
        if (!(p1 > 0.0)) flag("phi", 1, r, p1, "phi'(r) >= c1 > 0");
        if (b.c1) {
            if (d0 < *b.c1) flag("d", 0, r, d0, "d(r) >= c1");
            if (p1 < *b.c1) flag("phi", 1, r, p1, "phi'(r) >= c1");
        }
        if (b.c2 && p1 > *b.c2) flag("phi", 1, r, p1, "phi'(r) <= c2");
        if (b.c3) {
            if (std::abs(d1) > *b.c3) flag("d", 1, r, d1, "|d'(r)| <= c3");
            if (std::abs(p1) > *b.c3) flag("phi", 1, r, p1, "|phi'(r)| <= c3");
            if (std::abs(p2) > *b.c3) flag("phi", 2, r, p2, "|phi''(r)| <= c3");
            if (std::abs(p3) > *b.c3) flag("phi", 3, r, p3, "|phi'''(r)| <= c3");
        }
    }
    for (const auto& c : {b.c1, b.c2, b.c3}) {
        if (c && !(*c > 0.0)) flag("bounds", 0, 0.0, *c, "hypothesis constants must be positive");
    }
    report.pass = report.violations.empty();
    return report;
}

}  // namespace deadoil
