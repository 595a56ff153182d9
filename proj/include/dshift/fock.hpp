#ifndef DSHIFT_FOCK_HPP
#define DSHIFT_FOCK_HPP

#include <complex>
#include <map>
#include <vector>

#include "dshift/multiindex.hpp"

namespace dshift {

using Complex = std::complex<double>;

/// Degree-n element of the symmetric subspace of (C^d)^{tensor n}, stored in
/// monomial coordinates: map from a degree-n multi-index k to the amplitude
/// of the (orthogonal, non-normalized) symmetric tensor e_1^{k_1}...e_d^{k_d}.
struct SymTensor {
    int d = 0;
    int degree = 0;
    std::map<MultiIndex, Complex> coefficients;

    /// <s, t> with weights ||e^k||^2 = k!/|k|!.
    static Complex inner(const SymTensor& s, const SymTensor& t);
    double norm_sq() const { return inner(*this, *this).real(); }
};

/// ||e_1^{k_1}...e_d^{k_d}||^2 = k_1!...k_d! / |k|!, exact.
Rational monomial_norm_sq(const MultiIndex& k);

/// Brute-force oracle: materializes e_{i_1} (x) ... (x) e_{i_n} in the full
/// d^n-dimensional tensor space, averages over all n! position permutations
/// and returns the exact squared norm of the projection. word entries are
/// 1-based basis labels. Enforces n <= 8 and d^n <= 10^7.
Rational sym_project_oracle(int d, const std::vector<int>& word);

/// Symmetric multiplication by the vector a: the creation operator sending a
/// degree n-1 tensor to degree n.
SymTensor creation_apply(const std::vector<Complex>& a, const SymTensor& t);

/// Adjoint of the creation operator by a: the coefficient of k - e_j picks up
/// (k_j/|k|) conj(a_j) times the coefficient of k.
SymTensor creation_adjoint_apply(const std::vector<Complex>& a, const SymTensor& t);

}  // namespace dshift

#endif
