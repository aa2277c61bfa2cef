#include "deadoil/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "deadoil/error.hpp"

namespace deadoil {

Discretization::Discretization(int nx, int ny, int nt, double T)
    : nx_(nx), ny_(ny), nt_(nt), T_(T) {
    if (nx < 3 || ny < 3) {
        throw ConfigError("grid: nx and ny must be at least 3");
    }
    if (nt < 2) {
        throw ConfigError("grid: nt must be at least 2");
    }
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw ConfigError("grid: T must be positive and finite");
    }
    hx_ = 1.0 / (nx + 1);
    hy_ = 1.0 / (ny + 1);
    dt_ = T / nt;
}

void require_same_grid(const Discretization& a, const Discretization& b, const char* where) {
    if (!(a == b)) {
        std::ostringstream msg;
        msg << where << ": mismatched discretizations (" << a.nx() << "x" << a.ny() << "x" << a.nt()
            << ", T=" << a.T() << " vs " << b.nx() << "x" << b.ny() << "x" << b.nt() << ", T=" << b.T()
            << ")";
        throw ConfigError(msg.str());
    }
}

// ---------------------------------------------------------------------------
// ScalarField

ScalarField::ScalarField(const Discretization& disc, double fill) : disc_(disc), values_(disc.nodes(), fill) {}

ScalarField::ScalarField(const Discretization& disc, std::vector<double> values)
    : disc_(disc), values_(std::move(values)) {
    if (values_.size() != disc_.nodes()) {
        throw ConfigError("ScalarField: value count does not match nx*ny");
    }
}

ScalarField& ScalarField::operator+=(const ScalarField& other) { return axpy(1.0, other); }

ScalarField& ScalarField::operator-=(const ScalarField& other) { return axpy(-1.0, other); }

ScalarField& ScalarField::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

ScalarField& ScalarField::axpy(double s, const ScalarField& other) {
    require_same_grid(disc_, other.disc_, "ScalarField");
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += s * other.values_[k];
    return *this;
}

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double ScalarField::min() const { return *std::min_element(values_.begin(), values_.end()); }

double ScalarField::max() const { return *std::max_element(values_.begin(), values_.end()); }

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

ScalarField hadamard(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.disc(), b.disc(), "hadamard");
    ScalarField out(a.disc());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * b[k];
    return out;
}

// ---------------------------------------------------------------------------
// SpaceTimeField

SpaceTimeField::SpaceTimeField(const Discretization& disc, double fill)
    : disc_(disc), frames_(disc.nt() + 1, ScalarField(disc, fill)) {}

SpaceTimeField SpaceTimeField::constant_in_time(const ScalarField& frame) {
    SpaceTimeField out(frame.disc());
    for (auto& f : out.frames_) f = frame;
    return out;
}

SpaceTimeField& SpaceTimeField::operator+=(const SpaceTimeField& other) { return axpy(1.0, other); }

SpaceTimeField& SpaceTimeField::operator-=(const SpaceTimeField& other) { return axpy(-1.0, other); }

SpaceTimeField& SpaceTimeField::operator*=(double s) {
    for (auto& f : frames_) f *= s;
    return *this;
}

SpaceTimeField& SpaceTimeField::axpy(double s, const SpaceTimeField& other) {
    require_same_grid(disc_, other.disc_, "SpaceTimeField");
    for (std::size_t n = 0; n < frames_.size(); ++n) frames_[n].axpy(s, other.frames_[n]);
    return *this;
}

double SpaceTimeField::max_abs() const {
    double m = 0.0;
    for (const auto& f : frames_) m = std::max(m, f.max_abs());
    return m;
}

SpaceTimeField operator+(SpaceTimeField a, const SpaceTimeField& b) { return a += b; }
SpaceTimeField operator-(SpaceTimeField a, const SpaceTimeField& b) { return a -= b; }
SpaceTimeField operator*(double s, SpaceTimeField a) { return a *= s; }

// ---------------------------------------------------------------------------
// Operators

FaceCoefficients::FaceCoefficients(const ScalarField& c)
    : disc(c.disc()),
      x_faces(static_cast<std::size_t>(c.disc().nx() + 1) * c.disc().ny()),
      y_faces(static_cast<std::size_t>(c.disc().nx()) * (c.disc().ny() + 1)) {
    const int nx = disc.nx();
    const int ny = disc.ny();
    for (int j = 0; j < ny; ++j) {
        const std::size_t row = static_cast<std::size_t>(j) * (nx + 1);
        x_faces[row] = c.at(0, j);
        for (int i = 1; i < nx; ++i) x_faces[row + i] = 0.5 * (c.at(i - 1, j) + c.at(i, j));
        x_faces[row + nx] = c.at(nx - 1, j);
    }
    for (int i = 0; i < nx; ++i) {
        y_faces[i] = c.at(i, 0);
        for (int j = 1; j < ny; ++j) y_faces[static_cast<std::size_t>(j) * nx + i] = 0.5 * (c.at(i, j - 1) + c.at(i, j));
        y_faces[static_cast<std::size_t>(ny) * nx + i] = c.at(i, ny - 1);
    }
}

void apply_div_coeff_grad(const FaceCoefficients& faces, std::span<const double> v, std::span<double> out) {
    const Discretization& d = faces.disc;
    const int nx = d.nx();
    const int ny = d.ny();
    const double ihx2 = 1.0 / (d.hx() * d.hx());
    const double ihy2 = 1.0 / (d.hy() * d.hy());
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const std::size_t k = d.index(i, j);
            const double vc = v[k];
            const double vw = i > 0 ? v[k - 1] : 0.0;
            const double ve = i < nx - 1 ? v[k + 1] : 0.0;
            const double vs = j > 0 ? v[k - nx] : 0.0;
            const double vn = j < ny - 1 ? v[k + nx] : 0.0;
            const std::size_t fx = static_cast<std::size_t>(j) * (nx + 1) + i;
            const double cw = faces.x_faces[fx];
            const double ce = faces.x_faces[fx + 1];
            const double cs = faces.y_faces[k];
            const double cn = faces.y_faces[k + nx];
            out[k] = (cw * (vw - vc) + ce * (ve - vc)) * ihx2 + (cs * (vs - vc) + cn * (vn - vc)) * ihy2;
        }
    }
}

ScalarField div_coeff_grad(const ScalarField& c, const ScalarField& v) {
    require_same_grid(c.disc(), v.disc(), "div_coeff_grad");
    ScalarField out(v.disc());
    apply_div_coeff_grad(FaceCoefficients(c), v.values(), out.values());
    return out;
}

ScalarField grad_dot(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.disc(), b.disc(), "grad_dot");
    const Discretization& d = a.disc();
    const int nx = d.nx();
    const int ny = d.ny();
    const double i2hx = 0.5 / d.hx();
    const double i2hy = 0.5 / d.hy();
    auto value = [&](const ScalarField& f, int i, int j) {
        return (i < 0 || i >= nx || j < 0 || j >= ny) ? 0.0 : f.at(i, j);
    };
    ScalarField out(d);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double ax = (value(a, i + 1, j) - value(a, i - 1, j)) * i2hx;
            const double bx = (value(b, i + 1, j) - value(b, i - 1, j)) * i2hx;
            const double ay = (value(a, i, j + 1) - value(a, i, j - 1)) * i2hy;
            const double by = (value(b, i, j + 1) - value(b, i, j - 1)) * i2hy;
            out.at(i, j) = ax * bx + ay * by;
        }
    }
    return out;
}

double lp_norm_qt(const SpaceTimeField& v, double exponent) {
    if (!(exponent >= 1.0)) {
        throw ConfigError("lp_norm_qt: exponent must be >= 1");
    }
    const Discretization& d = v.disc();
    double total = 0.0;
    for (int n = 0; n <= d.nt(); ++n) {
        double level = 0.0;
        for (double x : v[n].values()) level += std::pow(std::abs(x), exponent);
        total += d.time_weight(n) * level;
    }
    total *= d.dt() * d.cell_area();
    return std::pow(total, 1.0 / exponent);
}

double inner_qt(const SpaceTimeField& a, const SpaceTimeField& b) {
    require_same_grid(a.disc(), b.disc(), "inner_qt");
    const Discretization& d = a.disc();
    double total = 0.0;
    for (int n = 0; n <= d.nt(); ++n) {
        double level = 0.0;
        for (std::size_t k = 0; k < d.nodes(); ++k) level += a[n][k] * b[n][k];
        total += d.time_weight(n) * level;
    }
    return total * d.dt() * d.cell_area();
}

double l2_norm(const ScalarField& v) {
    double s = 0.0;
    for (double x : v.values()) s += x * x;
    return std::sqrt(s * v.disc().cell_area());
}

SpaceTimeField time_forward_diff(const SpaceTimeField& v) {
    const Discretization& d = v.disc();
    SpaceTimeField out(d);
    const double inv_dt = 1.0 / d.dt();
    for (int n = 0; n < d.nt(); ++n) {
        out[n] = inv_dt * (v[n + 1] - v[n]);
    }
    out[d.nt()] = out[d.nt() - 1];
    return out;
}

double interval_l2_norm(const SpaceTimeField& v) {
    const Discretization& d = v.disc();
    double total = 0.0;
    for (int n = 0; n < d.nt(); ++n) {
        for (double x : v[n].values()) total += x * x;
    }
    return std::sqrt(total * d.dt() * d.cell_area());
}

}  // namespace deadoil
