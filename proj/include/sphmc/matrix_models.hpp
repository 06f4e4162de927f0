#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "sphmc/rng.hpp"
#include "sphmc/sphere_geom.hpp"

namespace sphmc {

using ComplexMatrix = Eigen::MatrixXcd;

/// Thrown when B stays numerically singular (or the eigensolver fails)
/// through the whole retry budget.
class EnsembleSamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// n x n matrix of i.i.d. standard complex normals (E|z|^2 = 1).
inline ComplexMatrix sample_ginibre(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_ginibre: n must be >= 1");
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.complex_normal();
    return m;
}

struct SpectrumResult {
    std::vector<std::complex<double>> eigenvalues;
    bool converged = false;
};

/// Eigenvalues of a dense complex matrix (Schur decomposition underneath).
inline SpectrumResult eigenvalues_general(const ComplexMatrix& m) {
    SpectrumResult out;
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) return out;
    out.converged = true;
    out.eigenvalues.assign(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + m.rows());
    return out;
}

/// Eigenvalues of A B^{-1} for independent Ginibre A, B, as chart coordinates.
/// A B^{-1} is formed by an LU solve (never an explicit inverse); a singular B
/// or a failed eigensolve triggers a resample, at most `max_retries` times.
inline std::vector<StereoCoord> spherical_ensemble(int n, Rng& rng, int max_retries = 8) {
    if (n < 1) throw std::invalid_argument("spherical_ensemble: n must be >= 1");
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        const ComplexMatrix a = sample_ginibre(n, rng);
        const ComplexMatrix b = sample_ginibre(n, rng);
        // X B = A  <=>  B^T X^T = A^T
        Eigen::PartialPivLU<ComplexMatrix> lu(b.transpose());
        const double pivot_floor = 1e-12 * b.norm();
        if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() <= pivot_floor) continue;
        const ComplexMatrix x = lu.solve(a.transpose()).transpose();
        const SpectrumResult spec = eigenvalues_general(x);
        if (!spec.converged) continue;
        return spec.eigenvalues;
    }
    throw EnsembleSamplingError(
        "spherical_ensemble: retry budget exhausted (singular B or eigensolver failure)");
}

}  // namespace sphmc
