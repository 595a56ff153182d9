#include "dshift/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dshift {

Complex SymTensor::inner(const SymTensor& s, const SymTensor& t) {
    if (s.d != t.d || s.degree != t.degree)
        throw std::invalid_argument("SymTensor::inner: shape mismatch");
    Complex acc = 0.0;
    for (const auto& [k, c] : s.coefficients) {
        auto it = t.coefficients.find(k);
        if (it == t.coefficients.end()) continue;
        acc += c * std::conj(it->second) * static_cast<double>(monomial_norm_sq(k));
    }
    return acc;
}

Rational monomial_norm_sq(const MultiIndex& k) {
    return Rational(multiindex_factorial(k), factorial(total_degree(k)));
}

Rational sym_project_oracle(int d, const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    if (n > 8) throw std::length_error("sym_project_oracle: word length > 8");
    double full = std::pow(static_cast<double>(d), n);
    if (full > 1e7) throw std::length_error("sym_project_oracle: tensor space too large");
    for (int i : word)
        if (i < 1 || i > d) throw std::invalid_argument("sym_project_oracle: label out of range");

    // amplitude per word of the full tensor space, indexed base-d
    const size_t dim = static_cast<size_t>(full);
    std::map<size_t, Rational> amp;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    BigInt nfact = factorial(n);
    Rational unit(1, nfact);
    do {
        size_t idx = 0;
        for (int pos = 0; pos < n; ++pos)
            idx = idx * static_cast<size_t>(d) + static_cast<size_t>(word[static_cast<size_t>(perm[static_cast<size_t>(pos)])] - 1);
        amp[idx] += unit;
    } while (std::next_permutation(perm.begin(), perm.end()));
    (void)dim;

    Rational norm_sq = 0;
    for (const auto& [idx, a] : amp) norm_sq += a * a;
    return norm_sq;
}

SymTensor creation_apply(const std::vector<Complex>& a, const SymTensor& t) {
    if (static_cast<int>(a.size()) != t.d)
        throw std::invalid_argument("creation_apply: vector dimension mismatch");
    SymTensor out;
    out.d = t.d;
    out.degree = t.degree + 1;
    for (const auto& [k, c] : t.coefficients) {
        for (int j = 0; j < t.d; ++j) {
            if (a[static_cast<size_t>(j)] == Complex(0.0)) continue;
            MultiIndex kk = k;
            kk[static_cast<size_t>(j)] += 1;
            out.coefficients[kk] += a[static_cast<size_t>(j)] * c;
        }
    }
    return out;
}

SymTensor creation_adjoint_apply(const std::vector<Complex>& a, const SymTensor& t) {
    if (static_cast<int>(a.size()) != t.d)
        throw std::invalid_argument("creation_adjoint_apply: vector dimension mismatch");
    if (t.degree < 1)
        throw std::invalid_argument("creation_adjoint_apply: degree-0 input");
    SymTensor out;
    out.d = t.d;
    out.degree = t.degree - 1;
    const double p = t.degree;
    for (const auto& [k, c] : t.coefficients) {
        for (int j = 0; j < t.d; ++j) {
            if (k[static_cast<size_t>(j)] == 0 || a[static_cast<size_t>(j)] == 0.0) continue;
            MultiIndex kk = k;
            kk[static_cast<size_t>(j)] -= 1;
            out.coefficients[kk] +=
                (k[static_cast<size_t>(j)] / p) * std::conj(a[static_cast<size_t>(j)]) * c;
        }
    }
    return out;
}

}  // namespace dshift
