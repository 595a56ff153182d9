#ifndef DSHIFT_DILATION_HPP
#define DSHIFT_DILATION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dshift/operator_matrix.hpp"
#include "dshift/poly.hpp"

namespace dshift {

/// Commuting tuple of d matrices with row norm at most one.
struct DContraction {
    int d = 0;
    std::vector<Matrix> ops;

    int space_dim() const { return ops.empty() ? 0 : static_cast<int>(ops.front().rows()); }

    std::string to_json() const;  // {d, m, matrices: [row-major [re, im]]}
    static DContraction from_json(const std::string& text);
};

/// Thrown by validate with the worst offending pair / excess attached.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Checks commutativity (1e-10 relative) and row norm <= 1 + 1e-10.
DContraction validate(int d, std::vector<Matrix> ops);

/// Joint-diagonal commuting normal tuple supported on unit-sphere points:
/// Z_k = diag of k-th coordinates, so sum Z_k^* Z_k = 1.
struct SphericalTuple {
    int d = 0;
    std::vector<std::vector<Complex>> points;

    static SphericalTuple from_points(int d, std::vector<std::vector<Complex>> pts);
    DContraction as_contraction() const;
};

struct DefectResult {
    Matrix delta;   // (1 - sum T_k T_k^*)^{1/2}
    int rank = 0;   // dim of the defect space
    Matrix k_basis; // orthonormal columns spanning the defect space
};

DefectResult defect(const DContraction& t);

enum class NullVerdict { Null, NonNull, Undecided };

struct AInfinityResult {
    Matrix a;                 // last iterate of A -> sum T_k A T_k^*
    NullVerdict verdict = NullVerdict::Undecided;
    int iterations = 0;
    double last_norm = 0.0;
    double last_step = 0.0;
};

/// Iterates P(A) = sum T_k A T_k^* from the identity; the sequence is
/// monotone nonincreasing in the PSD order (checked every step).
AInfinityResult a_infinity(const DContraction& t, int maxiter = 10000);

struct DilationResult {
    Matrix delta;
    int defect_rank = 0;
    Matrix l;                     // from (Fock truncation) x K to H
    double l_norm = 0.0;          // must be <= 1 + 1e-9
    double coisometry_residual = 0.0;  // ||1 - L L^*||
    double tail_bound = 0.0;      // ||P^{N+1}(1)||
    BasisPtr fock_basis;
};

/// Column-by-column assembly of L(phi_alpha (x) xi) = T^alpha Delta xi /
/// sqrt(w(alpha)) over the truncated Fock basis tensor the defect space.
DilationResult build_L(const DContraction& t, int fock_degree);

/// phi(X) = L (X (x) 1_K) L^* for X on the same truncated Fock basis.
Matrix amorphism_apply(const DilationResult& dil, const OperatorMatrix& x);

/// f(T_1, ..., T_d) by direct matrix substitution.
Matrix evaluate_tuple(const Poly& f, const DContraction& t);

struct VnReport {
    double lhs = 0.0;        // ||f(T)||
    double rhs = 0.0;        // multiplier lower bound at the full truncation
    double rhs_half = 0.0;   // same at half the truncation degree (trend)
    double margin = 0.0;     // rhs - lhs
};

/// von Neumann inequality report: lhs <= lim_N rhs is the theorem; at a
/// finite truncation the margin is reported, not asserted, unless the caller
/// knows T is a compression at degree <= N.
VnReport vn_check(const DContraction& t, const Poly& f, int fock_degree);

/// Compression of n copies of the shift direct-sum a spherical tuple to a
/// co-invariant subspace given by orthonormal columns (co-invariance checked
/// to 1e-10).
DContraction model_compress(int d, int multiplicity, const std::optional<SphericalTuple>& z,
                            const Matrix& coinvariant_basis, int fock_degree);

}  // namespace dshift

#endif
