#include "dshift/basis.hpp"

#include <cmath>
#include <stdexcept>

#include "dshift/fock.hpp"

namespace dshift {

TruncatedBasis::TruncatedBasis(int d, int max_degree) : d_(d), max_degree_(max_degree) {
    if (d < 1) throw std::invalid_argument("TruncatedBasis: d must be >= 1");
    if (max_degree < 0) throw std::invalid_argument("TruncatedBasis: N must be >= 0");
    for (int n = 0; n <= max_degree; ++n) {
        degree_offsets_.push_back(static_cast<int>(indices_.size()));
        for (auto& alpha : enumerate_degree(d, n)) {
            positions_[alpha] = static_cast<int>(indices_.size());
            weights_.push_back(monomial_norm_sq(alpha));
            sqrt_weights_.push_back(std::sqrt(static_cast<double>(weights_.back())));
            indices_.push_back(std::move(alpha));
        }
    }
    degree_offsets_.push_back(static_cast<int>(indices_.size()));
}

int TruncatedBasis::position(const MultiIndex& alpha) const {
    auto it = positions_.find(alpha);
    return it == positions_.end() ? -1 : it->second;
}

int TruncatedBasis::size_through_degree(int n) const {
    if (n < 0) return 0;
    if (n >= max_degree_) return size();
    return degree_offsets_[static_cast<size_t>(n) + 1];
}

BasisPtr build_basis(int d, int max_degree) {
    BigInt sz = 0;
    for (int n = 0; n <= max_degree; ++n) sz += dim_symmetric(d, n);
    if (sz > 200000) throw std::length_error("build_basis: basis size exceeds 2e5 cap");
    return std::make_shared<TruncatedBasis>(d, max_degree);
}

}  // namespace dshift
