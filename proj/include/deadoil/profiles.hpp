#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "deadoil/mesh.hpp"

namespace deadoil {

/// Separable time modulation multiplying a spatial profile.
///
///   tconst()    1
///   tsin(k)     sin(k pi t / T)
///   tcos(k)     cos(k pi t / T)
///   texp(a)     exp(a t)
///   tlin(a, b)  a + b t
struct TimeFactor {
    std::string name = "tconst";
    std::vector<double> params;

    double operator()(double t, double T) const;
};

/// Analytic field description, `space(params)` or `space(params)*time(params)`.
///
/// Spatial profiles on the unit square:
///   zero()                 0
///   constant(c)            c
///   sinprod(a)             a sin(pi x) sin(pi y)
///   polyprod(a)            a x(1-x) y(1-y)
///   bump(a, x0, y0, r)     a exp(1 - r^2/(r^2 - rho^2)) for rho < r, else 0
///   random(seed)           smooth seeded sum of sine modes, also varying in t
struct ProfileSpec {
    std::string name;
    std::vector<double> params;
    TimeFactor time;

    /// Canonical text form, parseable by parse_profile.
    std::string text() const;
};

/// Throws ConfigError on unknown names, wrong arity or bad syntax.
ProfileSpec parse_profile(std::string_view expr);

/// True when every sample of the profile has zero trace on the boundary of the
/// unit square (everything except a nonzero constant).
bool vanishes_on_boundary(const ProfileSpec& spec);

ScalarField eval_profile(const ProfileSpec& spec, const Discretization& disc, double t = 0.0);
SpaceTimeField eval_profile_qt(const ProfileSpec& spec, const Discretization& disc);

/// Seeded smooth field: sum over k, l in 1..3 and m in 0..2 of
/// c_klm sin(k pi x) sin(l pi y) cos(m pi t / T), c_klm uniform in
/// [-1, 1] / (k l (m+1)).
SpaceTimeField smooth_random_field(const Discretization& disc, std::uint64_t seed);

}  // namespace deadoil
