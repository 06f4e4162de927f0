#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "sphmc/rng.hpp"

namespace sphmc {

/// Complex coordinate of the south-centered stereographic chart. The north
/// pole has no coordinate; operations that would need one return nullopt.
using StereoCoord = std::complex<double>;

/// Point of the unit sphere in R^3. Constructors normalize, so the unit-norm
/// invariant holds to within a rounding error.
struct SpherePoint {
    double x, y, z;

    SpherePoint(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
        const double r = std::sqrt(x * x + y * y + z * z);
        if (!(r > 0.0) || !std::isfinite(r))
            throw std::invalid_argument("SpherePoint: vector cannot be normalized");
        x /= r;
        y /= r;
        z /= r;
    }

    double dot(const SpherePoint& o) const noexcept { return x * o.x + y * o.y + z * o.z; }
};

/// Rotation matrix in SO(3), row-major.
struct Rotation3 {
    std::array<double, 9> m;

    static Rotation3 identity() noexcept { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    /// Matrix of the rotation encoded by a quaternion (normalized internally).
    static Rotation3 from_quaternion(double w, double x, double y, double z) {
        const double n = std::sqrt(w * w + x * x + y * y + z * z);
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::invalid_argument("Rotation3: zero quaternion");
        w /= n;
        x /= n;
        y /= n;
        z /= n;
        return {{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
                 2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
                 2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
    }

    static Rotation3 from_axis_angle(double ax, double ay, double az, double angle) {
        const double n = std::sqrt(ax * ax + ay * ay + az * az);
        if (!(n > 0.0)) throw std::invalid_argument("Rotation3: zero axis");
        const double s = std::sin(angle / 2) / n;
        return from_quaternion(std::cos(angle / 2), s * ax, s * ay, s * az);
    }
};

/// zeta = (x + iy)/(1 - z). Fails (returns nullopt) within 1e-14 of the
/// north pole, where the chart is undefined.
inline std::optional<StereoCoord> stereographic_south(const SpherePoint& p) {
    const double denom = 1.0 - p.z;
    if (denom < 1e-14) return std::nullopt;
    return StereoCoord{p.x / denom, p.y / denom};
}

/// Inverse of the south-centered chart; total on finite zeta. Written with
/// 2/(1+|zeta|^2) so that huge chart coordinates (spherical-ensemble
/// eigenvalues routinely exceed 1e8) land near the north pole instead of
/// overflowing.
inline SpherePoint inverse_stereographic(StereoCoord zeta) {
    const double t = std::norm(zeta);
    if (std::isinf(t)) return SpherePoint{0.0, 0.0, 1.0};
    const double denom = 1.0 + t;
    return SpherePoint{2.0 * zeta.real() / denom, 2.0 * zeta.imag() / denom,
                       1.0 - 2.0 / denom};
}

/// Measure-preserving map of the square onto the sphere:
/// (x, y) -> (sqrt(1-x^2) cos(pi(y+1)), sqrt(1-x^2) sin(pi(y+1)), x).
/// Pushes (1/4) * Lebesgue on [-1,1]^2 forward to the uniform probability
/// measure on the sphere.
inline SpherePoint square_to_sphere(double x, double y) {
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    const double ang = std::numbers::pi * (y + 1.0);
    return SpherePoint{s * std::cos(ang), s * std::sin(ang), x};
}

/// Haar-distributed rotation from a uniformly distributed unit quaternion
/// (four standard normals, normalized).
inline Rotation3 random_rotation(Rng& rng) {
    for (;;) {
        const double w = rng.normal();
        const double x = rng.normal();
        const double y = rng.normal();
        const double z = rng.normal();
        if (w * w + x * x + y * y + z * z > 1e-12)
            return Rotation3::from_quaternion(w, x, y, z);
    }
}

inline SpherePoint apply_rotation(const Rotation3& r, const SpherePoint& p) {
    const auto& m = r.m;
    return SpherePoint{m[0] * p.x + m[1] * p.y + m[2] * p.z,
                       m[3] * p.x + m[4] * p.y + m[5] * p.z,
                       m[6] * p.x + m[7] * p.y + m[8] * p.z};
}

/// Normalized uniform measure of the cap {p : p.z >= z0} (Archimedes hat-box).
inline double uniform_cap_fraction(double z0) { return (1.0 - z0) / 2.0; }

}  // namespace sphmc
