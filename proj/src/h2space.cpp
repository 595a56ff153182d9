#include "dshift/h2space.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "dshift/fock.hpp"

namespace dshift {

PointInBall::PointInBall(std::vector<Complex> z) : coordinates(std::move(z)) {
    if (coordinates.empty()) throw std::invalid_argument("PointInBall: empty coordinates");
    if (norm_sq() >= 1.0) throw std::invalid_argument("PointInBall: point not inside the open ball");
}

double PointInBall::norm_sq() const {
    double s = 0.0;
    for (const auto& c : coordinates) s += std::norm(c);
    return s;
}

Complex h2_inner(const Poly& f, const Poly& g) {
    if (f.dim() != g.dim() && !f.is_zero() && !g.is_zero())
        throw std::invalid_argument("h2_inner: dimension mismatch");
    Complex acc = 0.0;
    for (const auto& [a, c] : f.terms()) {
        Complex gc = g.coeff(a);
        if (gc == Complex(0.0)) continue;
        acc += c * std::conj(gc) * static_cast<double>(monomial_norm_sq(a));
    }
    return acc;
}

double weighted_norm_sq(const Poly& f, const WeightSystem& w) {
    double acc = 0.0;
    for (const auto& [a, c] : f.terms())
        acc += std::norm(c) * static_cast<double>(w.weight(a));
    return acc;
}

Complex evaluate(const Poly& f, const std::vector<Complex>& z) {
    if (static_cast<int>(z.size()) != f.dim() && !f.is_zero())
        throw std::invalid_argument("evaluate: point dimension mismatch");
    Complex acc = 0.0;
    for (const auto& [a, c] : f.terms()) {
        Complex m = c;
        for (size_t i = 0; i < a.size(); ++i)
            for (int p = 0; p < a[i]; ++p) m *= z[i];
        acc += m;
    }
    return acc;
}

Complex kernel_value(const PointInBall& x, const PointInBall& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("kernel_value: dimension mismatch");
    Complex yx = 0.0;
    for (int i = 0; i < x.dim(); ++i)
        yx += y.coordinates[static_cast<size_t>(i)] * std::conj(x.coordinates[static_cast<size_t>(i)]);
    return 1.0 / (1.0 - yx);
}

KernelTruncation kernel_poly(const PointInBall& x, int N) {
    const int d = x.dim();
    KernelTruncation out;
    out.poly = Poly(d);
    // coefficient of z^alpha in u_x is (|alpha|!/alpha!) conj(x)^alpha
    for (int n = 0; n <= N; ++n) {
        for (const auto& alpha : enumerate_degree(d, n)) {
            Complex c = static_cast<double>(Rational(factorial(n), multiindex_factorial(alpha)));
            bool zero = false;
            for (size_t i = 0; i < alpha.size() && !zero; ++i) {
                for (int p = 0; p < alpha[i]; ++p) c *= std::conj(x.coordinates[i]);
                if (c == Complex(0.0)) zero = true;
            }
            if (!zero && c != Complex(0.0)) out.poly.set_coeff(alpha, c);
        }
    }
    const double r2 = x.norm_sq();
    out.tail_norm_sq = std::pow(r2, N + 1) / (1.0 - r2);
    return out;
}

Matrix gram_matrix(const std::vector<PointInBall>& points, int /*N*/) {
    const int m = static_cast<int>(points.size());
    Matrix g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            g(i, j) = kernel_value(points[static_cast<size_t>(i)], points[static_cast<size_t>(j)]);
    return g;
}

OperatorMatrix gamma_matrix(const Matrix& V, const BasisPtr& basis) {
    const int d = basis->dim();
    if (V.rows() != d || V.cols() != d)
        throw std::invalid_argument("gamma_matrix: V must be d x d");
    if ((V.adjoint() * V - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("gamma_matrix: V is not unitary");

    const Matrix W = V.adjoint();  // V^{-1}
    // linear substitutions (V^{-1} z)_i as degree-1 polynomials
    std::vector<Poly> subs;
    for (int i = 0; i < d; ++i) {
        Poly li(d);
        for (int j = 0; j < d; ++j) {
            if (W(i, j) == Complex(0.0)) continue;
            MultiIndex e(static_cast<size_t>(d), 0);
            e[static_cast<size_t>(j)] = 1;
            li.set_coeff(e, W(i, j));
        }
        subs.push_back(std::move(li));
    }

    Matrix m = Matrix::Zero(basis->size(), basis->size());
    for (int col = 0; col < basis->size(); ++col) {
        const MultiIndex& beta = basis->at(col);
        Poly image = Poly::constant(d, 1.0);
        for (int i = 0; i < d; ++i)
            for (int p = 0; p < beta[static_cast<size_t>(i)]; ++p)
                image = image * subs[static_cast<size_t>(i)];
        for (const auto& [alpha, c] : image.terms()) {
            int row = basis->position(alpha);
            m(row, col) = c * basis->sqrt_weight(row) / basis->sqrt_weight(col);
        }
    }
    return OperatorMatrix(basis, std::move(m));
}

WeightSystem weight_system(WeightKind kind, int d) {
    if (d < 1) throw std::invalid_argument("weight_system: d must be >= 1");
    WeightSystem w;
    w.d = d;
    switch (kind) {
        case WeightKind::DruryArveson:
            w.name = "drury-arveson";
            w.weight = [](const MultiIndex& a) {
                return Rational(multiindex_factorial(a), factorial(total_degree(a)));
            };
            break;
        case WeightKind::HardyBoundary:
            w.name = "hardy-boundary";
            w.weight = [d](const MultiIndex& a) {
                return Rational(factorial(d - 1) * multiindex_factorial(a),
                                factorial(d - 1 + total_degree(a)));
            };
            break;
        case WeightKind::Bergman:
            w.name = "bergman";
            w.weight = [d](const MultiIndex& a) {
                return Rational(factorial(d) * multiindex_factorial(a),
                                factorial(d + total_degree(a)));
            };
            break;
    }
    return w;
}

double weight_monte_carlo_error(WeightKind kind, int d, const MultiIndex& alpha, long samples) {
    if (kind == WeightKind::DruryArveson)
        throw std::invalid_argument("weight_monte_carlo_error: no moment integral for this system");
    if (static_cast<int>(alpha.size()) != d)
        throw std::invalid_argument("weight_monte_carlo_error: alpha length != d");

    std::mt19937_64 rng(0x5eed0001u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    double acc = 0.0, comp = 0.0;  // Kahan
    std::vector<Complex> z(static_cast<size_t>(d));
    for (long s = 0; s < samples; ++s) {
        double nrm2 = 0.0;
        for (int i = 0; i < d; ++i) {
            z[static_cast<size_t>(i)] = Complex(gauss(rng), gauss(rng));
            nrm2 += std::norm(z[static_cast<size_t>(i)]);
        }
        double scale = 1.0 / std::sqrt(nrm2);
        if (kind == WeightKind::Bergman)
            scale *= std::pow(unif(rng), 1.0 / (2.0 * d));  // uniform radius in the ball
        double v = 1.0;
        for (int i = 0; i < d; ++i) {
            double m = std::norm(z[static_cast<size_t>(i)]) * scale * scale;
            for (int p = 0; p < alpha[static_cast<size_t>(i)]; ++p) v *= m;
        }
        double y = v - comp;
        double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    double mean = acc / static_cast<double>(samples);
    double exact = static_cast<double>(weight_system(kind, d).weight(alpha));
    return std::abs(mean - exact);
}

}  // namespace dshift
