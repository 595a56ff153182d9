#ifndef DSHIFT_POLY_HPP
#define DSHIFT_POLY_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "dshift/multiindex.hpp"

namespace dshift {

using Complex = std::complex<double>;

/// Polynomial in d complex variables: finitely supported map from
/// multi-index to coefficient. Zero coefficients are never stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(int d) : d_(d) {}

    static Poly constant(int d, Complex c);
    static Poly monomial(int d, const MultiIndex& alpha, Complex c = 1.0);

    int dim() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial

    Complex coeff(const MultiIndex& alpha) const;
    void set_coeff(const MultiIndex& alpha, Complex c);
    const std::map<MultiIndex, Complex>& terms() const { return terms_; }

    /// Degree-k homogeneous slice.
    Poly homogeneous_part(int k) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator*=(Complex c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Complex c, Poly p) { return p *= c; }

    /// JSON form {"d": int, "terms": [{"alpha": [...], "re": x, "im": y}]}.
    std::string to_json() const;
    static Poly from_json(const std::string& text);

private:
    int d_ = 0;
    std::map<MultiIndex, Complex> terms_;
};

}  // namespace dshift

#endif
