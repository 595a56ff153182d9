#include "dshift/extremal.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "dshift/numerics.hpp"
#include "dshift/shift.hpp"

namespace dshift {

RatioGrowth ratio_growth(int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("ratio_growth: need d, n >= 1");
    RatioGrowth out;
    double log_r2 = n * d * std::log(static_cast<double>(d)) + d * std::lgamma(n + 1.0) -
                    std::lgamma(static_cast<double>(n) * d + 1.0);
    out.value = std::exp(0.5 * log_r2);
    out.asymptote = std::pow(2.0 * std::pow(M_PI, d - 1) / d, 0.25) *
                    std::pow(static_cast<double>(n), (d - 1) / 4.0);
    return out;
}

ExtremalSeries ExtremalSeries::powers_of_four(int d, int count) {
    if (d < 2) throw std::invalid_argument("ExtremalSeries: requires d >= 2");
    if (count < 1) throw std::invalid_argument("ExtremalSeries: empty support");
    ExtremalSeries s;
    s.d = d;
    double total = 0.0;
    long n = 4;
    for (int i = 0; i < count; ++i) {
        s.support.push_back(n);
        double cn = std::pow(static_cast<double>(n), -(d - 1) / 4.0);
        s.c.push_back(cn);
        total += cn;
        n *= 4;
    }
    s.normalization = total;
    for (double& cn : s.c) cn /= total;
    return s;
}

ExtremalPoly build_extremal_fN(const ExtremalSeries& series, long N) {
    if (series.d < 2) throw std::invalid_argument("build_extremal_fN: requires d >= 2");
    const int d = series.d;
    ExtremalPoly out;
    out.poly = Poly(d);
    const double log_s = -0.5 * d * std::log(static_cast<double>(d));  // log of the sup norm of p
    for (size_t i = 0; i < series.support.size(); ++i) {
        long n = series.support[i];
        if (n > N) break;
        double cn = series.c[i];
        // coefficient c_n / s^n of (z_1...z_d)^n
        double coeff = cn * std::exp(-static_cast<double>(n) * log_s);
        out.poly.set_coeff(MultiIndex(static_cast<size_t>(d), static_cast<int>(n)), coeff);
        double r = ratio_growth(d, static_cast<int>(n)).value;
        out.norm_sq += cn * cn * r * r;
    }
    if (out.poly.is_zero()) {
        // empty cutoff: represent f_N = 0 with zero norm
        out.norm_sq = 0.0;
    }
    return out;
}

double multiplier_lower_bound(const Poly& f, const BasisPtr& basis) {
    return operator_norm(multiplication_matrix(f, basis)).value;
}

EnergyReport energy_shift(int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("energy_shift: need d, n >= 1");
    EnergyReport r;
    r.d = d;
    r.n = n;
    r.closed_form = static_cast<double>(dim_symmetric(d, n));
    r.binomial_bound = r.closed_form;
    auto basis = build_basis(d, n + 2);
    r.direct = pstar_power_direct(basis, n).mat(0, 0).real();
    return r;
}

double energy_lower_bound(const MatrixTuple& t, int n) {
    if (t.ops.empty()) throw std::invalid_argument("energy_lower_bound: empty tuple");
    const Eigen::Index m = t.ops.front().rows();
    Matrix a = Matrix::Identity(m, m);
    for (int it = 0; it < n; ++it) {
        Matrix next = Matrix::Zero(m, m);
        for (const auto& op : t.ops) next += op.adjoint() * a * op;
        a = std::move(next);
    }
    return operator_norm(a).value;
}

MatrixTuple make_commuting_tuple(int d, int m, unsigned seed, double target_row_norm) {
    if (d < 1 || m < 1) throw std::invalid_argument("make_commuting_tuple: need d, m >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    // seed matrix: Jordan block mixed with a diagonal
    Matrix j = Matrix::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        j(i, i) = 0.5 * unif(rng);
        if (i + 1 < m) j(i, i + 1) = 0.7;
    }
    std::vector<Matrix> powers{Matrix::Identity(m, m)};
    for (int p = 1; p <= 3; ++p) powers.push_back(powers.back() * j);

    MatrixTuple t;
    t.d = d;
    for (int k = 0; k < d; ++k) {
        Matrix tk = Matrix::Zero(m, m);
        for (int p = 0; p <= 3; ++p)
            tk += Complex(unif(rng), unif(rng)) * powers[static_cast<size_t>(p)];
        t.ops.push_back(std::move(tk));
    }
    Matrix row = Matrix::Zero(m, m);
    for (const auto& op : t.ops) row += op * op.adjoint();
    double lambda = operator_norm(row).value;
    double scale = lambda > 0.0 ? std::sqrt(target_row_norm / lambda) : 0.0;
    for (auto& op : t.ops) op *= scale;
    return t;
}

}  // namespace dshift
