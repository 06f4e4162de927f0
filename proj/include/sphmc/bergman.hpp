#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "sphmc/sphere_geom.hpp"

namespace sphmc {

namespace detail {

/// log(1 + |z|^2) without overflowing |z|^2.
inline double log_one_plus_abs2(StereoCoord z) {
    const double t = std::norm(z);
    if (t > 1e16) {
        const double a = std::abs(z);  // hypot, overflow-safe
        return 2.0 * std::log(a) + (std::isinf(t) ? 0.0 : std::log1p(1.0 / t));
    }
    return std::log1p(t);
}

/// log |1 + zeta * conj(xi)|. Returns -infinity when the argument is exactly
/// zero (points antipodal on the sphere). Stable both for huge products and
/// for products near -1.
inline double log_abs_one_plus_prod(StereoCoord zeta, StereoCoord xi) {
    const double az = std::abs(zeta);
    const double ax = std::abs(xi);
    if (az * ax > 1e16) {
        // |1 + w| = |w| up to a relative 1e-16; log|w| = log|zeta| + log|xi|.
        return std::log(az) + std::log(ax);
    }
    const std::complex<double> w = zeta * std::conj(xi);
    // |1 + w|^2 = 1 + (2 Re w + |w|^2)
    const double t = 2.0 * w.real() + std::norm(w);
    if (t <= -1.0) return -std::numeric_limits<double>::infinity();
    return 0.5 * std::log1p(t);
}

/// log C(k, l) via log-gamma; C(1000, 500) overflows every integer type.
inline double log_binomial(int k, int l) {
    return std::lgamma(double(k) + 1.0) - std::lgamma(double(l) + 1.0) -
           std::lgamma(double(k - l) + 1.0);
}

}  // namespace detail

/// Degree-k Bergman kernel of the sphere in the south chart,
///   B(zeta, xi) = (k+1) (1 + zeta conj(xi))^k
///                 / ((1+|zeta|^2)^{k/2} (1+|xi|^2)^{k/2}),
/// evaluated only through logarithms: the k-th powers overflow doubles long
/// before the interesting range of k is reached.
struct BergmanKernel {
    int k;

    explicit BergmanKernel(int tensor_power) : k(tensor_power) {
        if (k < 0) throw std::invalid_argument("BergmanKernel: k must be >= 0");
    }

    /// Number of points of the associated ensemble, N_k = k + 1.
    int dimension() const noexcept { return k + 1; }
};

/// log |B(zeta, xi)|^2. Returns -infinity exactly when 1 + zeta conj(xi) = 0.
inline double kernel_log_abs2(const BergmanKernel& kern, StereoCoord zeta, StereoCoord xi) {
    const double cross = detail::log_abs_one_plus_prod(zeta, xi);
    if (std::isinf(cross) && cross < 0) return cross;
    const double lz = detail::log_one_plus_abs2(zeta);
    const double lx = detail::log_one_plus_abs2(xi);
    return 2.0 * std::log(double(kern.k) + 1.0) + double(kern.k) * (2.0 * cross - lz - lx);
}

/// B(zeta, zeta) = k + 1 identically; no floating computation involved.
inline double kernel_diag(const BergmanKernel& kern, StereoCoord /*zeta*/) {
    return double(kern.k) + 1.0;
}

/// Weighted orthonormal section s_l(zeta) = sqrt(k+1) sqrt(C(k,l)) zeta^l,
/// carrying the metric factor (1+|zeta|^2)^{-k/2}. Magnitude is assembled in
/// the log domain, phase is l * arg(zeta).
inline std::complex<double> weighted_harmonic(const BergmanKernel& kern, int ell,
                                              StereoCoord zeta) {
    if (ell < 0 || ell > kern.k)
        throw std::invalid_argument("weighted_harmonic: degree out of [0, k]");
    if (zeta == StereoCoord{0.0, 0.0})
        return ell == 0 ? std::complex<double>{std::sqrt(double(kern.k) + 1.0), 0.0}
                        : std::complex<double>{0.0, 0.0};
    const double log_mag = 0.5 * std::log(double(kern.k) + 1.0) +
                           0.5 * detail::log_binomial(kern.k, ell) +
                           double(ell) * std::log(std::abs(zeta)) -
                           0.5 * double(kern.k) * detail::log_one_plus_abs2(zeta);
    return std::polar(std::exp(log_mag), double(ell) * std::arg(zeta));
}

}  // namespace sphmc
