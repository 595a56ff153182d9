#ifndef DSHIFT_H2SPACE_HPP
#define DSHIFT_H2SPACE_HPP

#include <functional>
#include <string>
#include <vector>

#include "dshift/operator_matrix.hpp"
#include "dshift/poly.hpp"

namespace dshift {

/// Point in the open unit ball of C^d.
struct PointInBall {
    std::vector<Complex> coordinates;

    explicit PointInBall(std::vector<Complex> z);
    int dim() const { return static_cast<int>(coordinates.size()); }
    double norm_sq() const;
};

/// Rotation-invariant Hilbert norm on polynomials, given by the squared
/// monomial norms w(alpha). w(0) = 1 and w > 0 throughout.
struct WeightSystem {
    std::string name;
    int d = 0;
    std::function<Rational(const MultiIndex&)> weight;
};

enum class WeightKind { DruryArveson, HardyBoundary, Bergman };

/// <f, g> = sum f_alpha conj(g_alpha) alpha!/|alpha|!.
Complex h2_inner(const Poly& f, const Poly& g);

/// Squared norm ||f||^2 in the weighted space given by w.
double weighted_norm_sq(const Poly& f, const WeightSystem& w);

/// Pointwise evaluation sum f_alpha z^alpha.
Complex evaluate(const Poly& f, const std::vector<Complex>& z);

/// Kernel value <u_x, u_y> = (1 - <y, x>)^{-1}.
Complex kernel_value(const PointInBall& x, const PointInBall& y);

/// Degree <= N truncation of the kernel function u_x, with the exact
/// H^2 tail ||u_x - u_x^{(N)}||^2 = ||x||^{2(N+1)} / (1 - ||x||^2).
struct KernelTruncation {
    Poly poly;
    double tail_norm_sq = 0.0;
};
KernelTruncation kernel_poly(const PointInBall& x, int N);

/// Gram matrix G_ij = kernel_value(x_i, x_j); Hermitian PSD.
Matrix gram_matrix(const std::vector<PointInBall>& points, int N);

/// Matrix of f(z) -> f(V^* z) on the truncated orthonormal basis for a
/// unitary V; block diagonal across degrees and unitary.
OperatorMatrix gamma_matrix(const Matrix& V, const BasisPtr& basis);

/// Monomial weight systems: Drury-Arveson alpha!/|alpha|!, boundary Hardy
/// (d-1)! alpha! / (d-1+|alpha|)!, Bergman d! alpha! / (d+|alpha|)!.
WeightSystem weight_system(WeightKind kind, int d);

/// Monte Carlo check of a weight value against the defining moment integral
/// (surface measure for Hardy, volume measure for Bergman). Returns the
/// absolute error |sample mean - w(alpha)|. Deterministic fixed-seed sampling.
double weight_monte_carlo_error(WeightKind kind, int d, const MultiIndex& alpha,
                                long samples = 4000000);

}  // namespace dshift

#endif
