#ifndef DSHIFT_NUMERICS_HPP
#define DSHIFT_NUMERICS_HPP

#include "dshift/operator_matrix.hpp"
#include "dshift/poly.hpp"

namespace dshift {

struct NormResult {
    double value = 0.0;
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
};

/// Largest singular value. Power iteration on M^*M from the normalized
/// all-ones start; falls back to a full Hermitian eigendecomposition when
/// iteration stalls and the matrix is small enough (side <= 1500).
NormResult operator_norm(const Matrix& m, double tol = 1e-10, int maxiter = 5000);
NormResult operator_norm(const OperatorMatrix& m, double tol = 1e-10, int maxiter = 5000);

/// Smallest eigenvalue of a Hermitian matrix (input checked to 1e-10).
double min_eigenvalue_hermitian(const Matrix& m);

bool is_psd(const Matrix& m, double tol = 1e-10);

struct SphereSupResult {
    double value = 0.0;            // best |f(z)| found on the unit sphere
    std::vector<Complex> argmax;   // where it was found
};

/// Lower-bound estimate of sup_{||z|| <= 1} |f(z)| by deterministic
/// low-discrepancy sampling of the sphere plus multi-start projected
/// gradient ascent. Never an upper bound claim.
SphereSupResult sphere_sup(const Poly& f, long budget = 2048);

}  // namespace dshift

#endif
