#ifndef DSHIFT_SHIFT_HPP
#define DSHIFT_SHIFT_HPP

#include <map>
#include <string>
#include <vector>

#include "dshift/operator_matrix.hpp"
#include "dshift/poly.hpp"

namespace dshift {

/// Compression P_N M_{z_k} P_N of multiplication by the k-th coordinate:
/// sends the normalized monomial for alpha to sqrt((alpha_k+1)/(|alpha|+1))
/// times the one for alpha + e_k, and kills the top degree. k is 1-based.
OperatorMatrix shift_matrix(int k, const BasisPtr& basis);

/// Compression of multiplication by f (degree(f) <= N required).
OperatorMatrix multiplication_matrix(const Poly& f, const BasisPtr& basis);

/// f(S) applied to a coordinate vector in the orthonormal basis, without
/// forming the dense matrix.
Vector apply_multiplication(const Poly& f, const BasisPtr& basis, const Vector& v);

/// Grading operator: diagonal entry |alpha|.
OperatorMatrix number_operator(const BasisPtr& basis);

/// Rank-one projection onto the constants.
OperatorMatrix e0_projection(const BasisPtr& basis);

/// Named residual norms of the d-shift operator identities on the truncation:
/// the self-commutator identity for every pair (i,j) and the column-sum
/// identity on the interior (degrees <= N-1), the row-sum identity
/// S_1S_1^* + ... + S_dS_d^* + E_0 = 1 on the full truncation, the norm
/// ||sum S_k^*S_k|| on the interior, and the hyponormality minimum
/// eigenvalue of S_k^*S_k - S_kS_k^* over k.
std::map<std::string, double> relation_residuals(const BasisPtr& basis);

/// g_n(x) = prod_{k=1..n} (x+k+d-1)/(x+k) at x = 0..maxdeg, exact then rounded.
std::vector<double> pstar_power_diagonal(int d, int n, int maxdeg);

/// n-fold application of A -> sum_k S_k^* A S_k to the identity.
OperatorMatrix pstar_power_direct(const BasisPtr& basis, int n);

}  // namespace dshift

#endif
