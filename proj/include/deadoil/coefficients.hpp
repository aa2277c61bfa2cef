#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deadoil/mesh.hpp"

namespace deadoil {

/// One closed-form scalar function r -> F(r) with analytic derivatives up to
/// order 3.
///
///   identity()          r
///   constant(c)         c
///   affine(a, b)        a + b r
///   smoothstep(a, b)    a r + b tanh(r)
///   rational(a, b)      a + b r / sqrt(1 + r^2)
///   bell(a, s)          a sech^2(r / s),  s > 0
class CoefficientFamily {
public:
    CoefficientFamily(std::string name, std::vector<double> params);

    /// Throws ConfigError for unknown names or wrong arity.
    static CoefficientFamily parse(std::string_view expr);

    const std::string& name() const { return name_; }
    const std::vector<double>& params() const { return params_; }
    std::string text() const;

    /// order-th derivative at r, order in 0..3.
    double eval(int order, double r) const;

private:
    std::string name_;
    std::vector<double> params_;
};

enum class Coefficient { phi, g, d };

const char* to_string(Coefficient which);

/// Optional user-stated constants of the structural hypotheses. Unset bounds
/// are only checked for positivity (c1) or not at all (c2, c3).
struct HypothesisBounds {
    std::optional<double> c1;
    std::optional<double> c2;
    std::optional<double> c3;
};

/// The constitutive triple (phi, g, d). Immutable after construction.
class CoefficientModel {
public:
    CoefficientModel(CoefficientFamily phi, CoefficientFamily g, CoefficientFamily d, HypothesisBounds bounds = {});

    /// Highest derivative order the equations use: 3 for phi, 2 for g, 1 for d.
    static int max_order(Coefficient which);

    /// Throws ConfigError when `order` exceeds max_order(which).
    double eval(Coefficient which, int order, double r) const;

    double phi(int order, double r) const { return eval(Coefficient::phi, order, r); }
    double g(int order, double r) const { return eval(Coefficient::g, order, r); }
    double d(int order, double r) const { return eval(Coefficient::d, order, r); }

    /// Nodewise application to a field.
    ScalarField map(Coefficient which, int order, const ScalarField& u) const;

    const CoefficientFamily& family(Coefficient which) const;
    const HypothesisBounds& bounds() const { return bounds_; }

private:
    CoefficientFamily phi_;
    CoefficientFamily g_;
    CoefficientFamily d_;
    HypothesisBounds bounds_;
};

struct Violation {
    std::string function;  // "phi", "g" or "d"
    int order;
    double r;
    double value;
    std::string bound;  // which inequality failed, e.g. "d(r) >= c1 > 0"
};

struct ValidationReport {
    double range = 0.0;
    int samples = 0;
    double c1 = 0.0;  // observed min over samples of min(d, phi')
    double c2 = 0.0;  // observed max of phi'
    double c3 = 0.0;  // observed max of |d'|, |phi'|, |phi''|, |phi'''|
    bool pass = false;
    std::vector<Violation> violations;
};

/// Samples r uniformly on [-R, R] at M points and checks
///   c1 <= d(r),  c1 <= phi'(r) <= c2,  |d'|, |phi'|, |phi''|, |phi'''| <= c3
/// with c1 > 0. Failures are reported, not thrown.
ValidationReport validate_hypotheses(const CoefficientModel& model, double R, int M);

}  // namespace deadoil
