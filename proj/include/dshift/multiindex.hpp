#ifndef DSHIFT_MULTIINDEX_HPP
#define DSHIFT_MULTIINDEX_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dshift {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector alpha in N^d labeling the monomial z^alpha.
/// Comparison is plain lexicographic on the exponent tuple.
using MultiIndex = std::vector<int>;

/// Total degree |alpha| = sum of exponents.
int total_degree(const MultiIndex& alpha);

/// Exact factorial.
BigInt factorial(int n);

/// alpha! = alpha_1! alpha_2! ... alpha_d!
BigInt multiindex_factorial(const MultiIndex& alpha);

/// dim of the degree-n symmetric subspace over C^d: (n+d-1)! / (n! (d-1)!).
BigInt dim_symmetric(int d, int n);

/// Same dimension via the summation recurrence
///   a(n, d+1) = a(0, d) + a(1, d) + ... + a(n, d),  a(n, 1) = 1.
BigInt dim_by_recurrence(int d, int n);

/// dim_symmetric(d,n) * (d-1)! / (n+1)^(d-1); tends to 1 as n grows.
double dim_asymptotic_ratio(int d, int n);

/// All multi-indices of total degree n in d variables, degree-major order
/// with lexicographically descending exponents inside the block.
/// (d=2, n=3) -> (3,0), (2,1), (1,2), (0,3).
std::vector<MultiIndex> enumerate_degree(int d, int n);

}  // namespace dshift

#endif
