#ifndef DSHIFT_EXTREMAL_HPP
#define DSHIFT_EXTREMAL_HPP

#include <vector>

#include "dshift/operator_matrix.hpp"
#include "dshift/poly.hpp"

namespace dshift {

/// Norm-ratio data for powers of p = z_1 z_2 ... z_d.
struct RatioGrowth {
    double value = 0.0;      // R_n = ||p^n||_{H^2} / ||p^n||_inf
    double asymptote = 0.0;  // (2 pi^{d-1} / d)^{1/4} n^{(d-1)/4}
};

/// R_n = sqrt(d^{nd} (n!)^d / (nd)!), evaluated in log space.
RatioGrowth ratio_growth(int d, int n);

/// Coefficient rule for the bounded series whose Taylor polynomials have
/// unbounded H^2 norm: sparse support (powers of 4 by default), c_n
/// proportional to n^{-(d-1)/4} on the support, normalized to sum |c_n| = 1
/// over the enumerated support.
struct ExtremalSeries {
    int d = 2;
    std::vector<long> support;       // enumerated support, ascending
    std::vector<double> c;           // normalized coefficients, same order
    double normalization = 1.0;      // the constant divided out

    static ExtremalSeries powers_of_four(int d, int count);
};

struct ExtremalPoly {
    Poly poly;            // f_N
    double norm_sq = 0.0; // closed form sum |c_n|^2 d^{nd} (n!)^d / (nd)!
};

/// Degree cutoff N applies to the series index n (monomials (z_1...z_d)^n).
ExtremalPoly build_extremal_fN(const ExtremalSeries& series, long N);

/// ||M_f|| on the truncation; lower bound for the multiplier norm,
/// nondecreasing in the truncation degree.
double multiplier_lower_bound(const Poly& f, const BasisPtr& basis);

struct EnergyReport {
    int d = 0;
    int n = 0;
    double closed_form = 0.0;    // g_n(0) = (n+d-1)!/(n!(d-1)!)
    double direct = 0.0;         // degree-0 entry of the iterated map
    double binomial_bound = 0.0; // dim of the degree-n symmetric subspace
};

/// All three routes to the energy of the d-shift; they agree by construction.
EnergyReport energy_shift(int d, int n);

/// A commuting tuple of matrices with row norm <= 1.
struct MatrixTuple {
    int d = 0;
    std::vector<Matrix> ops;
};

/// ||sum over words of length n of T_w^* T_w||, computed by iterating
/// A -> sum_k T_k^* A T_k from the identity. Lower bound for the energy of
/// the spanned operator space.
double energy_lower_bound(const MatrixTuple& t, int n);

/// Deterministic commuting tuple: polynomials of a fixed Jordan-plus-diagonal
/// seed matrix, rescaled so the row norm equals target exactly.
MatrixTuple make_commuting_tuple(int d, int m, unsigned seed, double target_row_norm);

}  // namespace dshift

#endif
