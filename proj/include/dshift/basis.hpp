#ifndef DSHIFT_BASIS_HPP
#define DSHIFT_BASIS_HPP

#include <map>
#include <memory>
#include <vector>

#include "dshift/multiindex.hpp"

namespace dshift {

/// Ordered orthonormal monomial basis of the degree <= N truncation:
/// all multi-indices of degrees 0..N in graded-lex order, together with the
/// exact squared monomial norms w(alpha) = alpha!/|alpha|!.
class TruncatedBasis {
public:
    TruncatedBasis(int d, int max_degree);

    int dim() const { return d_; }
    int max_degree() const { return max_degree_; }
    int size() const { return static_cast<int>(indices_.size()); }

    const MultiIndex& at(int i) const { return indices_[static_cast<size_t>(i)]; }
    const std::vector<MultiIndex>& indices() const { return indices_; }

    /// Position of alpha in the ordering, or -1 when |alpha| > N.
    int position(const MultiIndex& alpha) const;

    /// w(alpha) = alpha!/|alpha|!, exact.
    const Rational& weight(int i) const { return weights_[static_cast<size_t>(i)]; }
    /// sqrt(w(alpha)) rounded once to double.
    double sqrt_weight(int i) const { return sqrt_weights_[static_cast<size_t>(i)]; }

    /// First basis position of the degree-n block.
    int degree_offset(int n) const { return degree_offsets_[static_cast<size_t>(n)]; }
    /// Number of basis elements of degree <= n.
    int size_through_degree(int n) const;

private:
    int d_;
    int max_degree_;
    std::vector<MultiIndex> indices_;
    std::vector<Rational> weights_;
    std::vector<double> sqrt_weights_;
    std::vector<int> degree_offsets_;
    std::map<MultiIndex, int> positions_;
};

using BasisPtr = std::shared_ptr<const TruncatedBasis>;

/// Shared construction with the resource cap from the contract.
BasisPtr build_basis(int d, int max_degree);

}  // namespace dshift

#endif
