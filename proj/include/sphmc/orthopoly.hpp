#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sphmc {

/// Legendre polynomial orthonormal w.r.t. Lebesgue measure on [-1,1]:
/// p_n = sqrt((2n+1)/2) P_n, with P_n from the three-term recurrence.
inline double legendre_orthonormal(int n, double x) {
    if (n < 0) throw std::invalid_argument("legendre_orthonormal: n must be >= 0");
    double pm1 = 1.0, p = x;
    if (n == 0) p = 1.0;
    for (int a = 1; a < n; ++a) {
        const double next = ((2 * a + 1) * x * p - a * pm1) / (a + 1);
        pm1 = p;
        p = next;
    }
    return std::sqrt((2.0 * n + 1.0) / 2.0) * p;
}

/// Fills out[0..max_degree] with p_0(x), ..., p_max(x) in one recurrence pass.
inline void legendre_orthonormal_all(int max_degree, double x, std::span<double> out) {
    if (max_degree < 0 || out.size() < std::size_t(max_degree) + 1)
        throw std::invalid_argument("legendre_orthonormal_all: bad degree/output span");
    double pm1 = 1.0, p = x;
    out[0] = std::sqrt(0.5);
    if (max_degree >= 1) out[1] = std::sqrt(1.5) * x;
    for (int a = 1; a < max_degree; ++a) {
        const double next = ((2 * a + 1) * x * p - a * pm1) / (a + 1);
        pm1 = p;
        p = next;
        out[a + 1] = std::sqrt((2.0 * (a + 1) + 1.0) / 2.0) * next;
    }
}

/// Ordered degree pairs (a, b) indexing the tensor basis p_a(x1) p_b(x2).
/// Graded by max degree, lexicographic within a grade, so a perfect-square
/// cardinality m^2 yields exactly the full square {0,...,m-1}^2.
struct DegreeSet {
    std::vector<std::pair<int, int>> pairs;
    int max_degree = 0;

    std::size_t size() const noexcept { return pairs.size(); }
};

inline DegreeSet make_degree_set(int n) {
    if (n < 1) throw std::invalid_argument("make_degree_set: n must be >= 1");
    DegreeSet ds;
    ds.pairs.reserve(std::size_t(n));
    for (int g = 0; int(ds.pairs.size()) < n; ++g) {
        for (int a = 0; a < g && int(ds.pairs.size()) < n; ++a) ds.pairs.emplace_back(a, g);
        for (int b = 0; b <= g && int(ds.pairs.size()) < n; ++b) ds.pairs.emplace_back(g, b);
        ds.max_degree = g;
    }
    return ds;
}

/// Scratch buffers for the two axis recurrences.
struct FeatureWorkspace {
    std::vector<double> p1, p2;
};

/// Componentwise p_a(x1) p_b(x2) over the degree set; one recurrence pass per
/// axis, O(sqrt(N) + N) per evaluation.
inline void feature_vector(const DegreeSet& ds, double x1, double x2, std::span<double> out,
                           FeatureWorkspace& ws) {
    if (out.size() < ds.size())
        throw std::invalid_argument("feature_vector: output span too small");
    const std::size_t m = std::size_t(ds.max_degree) + 1;
    ws.p1.resize(m);
    ws.p2.resize(m);
    legendre_orthonormal_all(ds.max_degree, x1, ws.p1);
    legendre_orthonormal_all(ds.max_degree, x2, ws.p2);
    for (std::size_t i = 0; i < ds.size(); ++i)
        out[i] = ws.p1[std::size_t(ds.pairs[i].first)] * ws.p2[std::size_t(ds.pairs[i].second)];
}

inline std::vector<double> feature_vector(const DegreeSet& ds, double x1, double x2) {
    std::vector<double> out(ds.size());
    FeatureWorkspace ws;
    feature_vector(ds, x1, x2, out, ws);
    return out;
}

/// K_N(x, x) = sum of squared feature components; strictly positive.
inline double kernel_diag_2d(const DegreeSet& ds, double x1, double x2) {
    FeatureWorkspace ws;
    std::vector<double> phi(ds.size());
    feature_vector(ds, x1, x2, phi, ws);
    double s = 0.0;
    for (double v : phi) s += v * v;
    return s;
}

}  // namespace sphmc
