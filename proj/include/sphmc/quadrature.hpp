#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sphmc/sphere_geom.hpp"

namespace sphmc {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes by Newton iteration on P_n from the asymptotic initial guess;
/// accurate to a few ulp for any practical n.
inline GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    GaussLegendre rule;
    rule.nodes.resize(std::size_t(n));
    rule.weights.resize(std::size_t(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double pm1 = 1.0, p = x;
            for (int a = 1; a < n; ++a) {
                const double next = ((2 * a + 1) * x * p - a * pm1) / (a + 1);
                pm1 = p;
                p = next;
            }
            dp = n * (x * p - pm1) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[std::size_t(i)] = -x;  // ascending order
        rule.weights[std::size_t(i)] = w;
        rule.nodes[std::size_t(n - 1 - i)] = x;
        rule.weights[std::size_t(n - 1 - i)] = w;
    }
    return rule;
}

/// Deterministic product quadrature of f against the uniform probability
/// measure on the sphere: Gauss-Legendre in z, trapezoid (periodic) in
/// azimuth.
template <typename F>
double sphere_product_quadrature(F&& f, int nz = 512, int naz = 1024) {
    const GaussLegendre gl = gauss_legendre(nz);
    double total = 0.0;
    for (int i = 0; i < nz; ++i) {
        const double z = gl.nodes[std::size_t(i)];
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        double ring = 0.0;
        for (int j = 0; j < naz; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / naz;
            ring += f(SpherePoint{s * std::cos(phi), s * std::sin(phi), z});
        }
        total += gl.weights[std::size_t(i)] * ring / naz;
    }
    // dvol = dz dphi / (4 pi); the z-weight sums to 2 and the ring average
    // replaces dphi/(2 pi).
    return total / 2.0;
}

}  // namespace sphmc
