#include "dshift/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "dshift/h2space.hpp"

namespace dshift {

namespace {

NormResult dense_fallback(const Matrix& m) {
    Matrix b = m.adjoint() * m;
    Eigen::SelfAdjointEigenSolver<Matrix> es(b, Eigen::EigenvaluesOnly);
    NormResult r;
    r.value = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
    r.converged = true;
    r.residual = 0.0;
    return r;
}

}  // namespace

NormResult operator_norm(const Matrix& m, double tol, int maxiter) {
    if (tol <= 0.0) throw std::invalid_argument("operator_norm: tol must be > 0");
    NormResult r;
    if (m.size() == 0) {
        r.converged = true;
        return r;
    }
    Vector v = Vector::Ones(m.cols());
    v.normalize();
    double sigma = 0.0;
    for (int it = 1; it <= maxiter; ++it) {
        Vector w = m * v;
        double s = w.norm();
        Vector u = m.adjoint() * w;
        double nu = u.norm();
        r.iterations = it;
        r.residual = std::abs(s - sigma) / std::max(s, 1e-300);
        sigma = s;
        if (nu == 0.0) {
            // start vector annihilated; either the matrix is zero or we
            // cannot proceed along this direction
            if (m.cwiseAbs().maxCoeff() == 0.0) {
                r.value = 0.0;
                r.converged = true;
                r.residual = 0.0;
                return r;
            }
            break;
        }
        v = u / nu;
        if (it > 1 && r.residual <= tol) {
            r.value = sigma;
            r.converged = true;
            return r;
        }
    }
    if (std::min(m.rows(), m.cols()) <= 1500) {
        NormResult f = dense_fallback(m);
        f.iterations = r.iterations;
        return f;
    }
    r.value = sigma;  // best available lower bound
    r.converged = false;
    return r;
}

NormResult operator_norm(const OperatorMatrix& m, double tol, int maxiter) {
    return operator_norm(m.mat, tol, maxiter);
}

double min_eigenvalue_hermitian(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("min_eigenvalue_hermitian: not square");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("min_eigenvalue_hermitian: matrix not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

bool is_psd(const Matrix& m, double tol) {
    return min_eigenvalue_hermitian(m) >= -tol;
}

namespace {

double halton(long index, int base) {
    double f = 1.0, r = 0.0;
    long i = index;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                           31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

// low-discrepancy point on the unit sphere of R^{2d} via Box-Muller
std::vector<double> sphere_point(long index, int d) {
    std::vector<double> v(static_cast<size_t>(2 * d));
    for (int j = 0; j < d; ++j) {
        double u1 = halton(index + 1, kPrimes[2 * j]);
        double u2 = halton(index + 1, kPrimes[2 * j + 1]);
        u1 = std::max(u1, 1e-12);
        double rad = std::sqrt(-2.0 * std::log(u1));
        v[static_cast<size_t>(2 * j)] = rad * std::cos(2.0 * M_PI * u2);
        v[static_cast<size_t>(2 * j + 1)] = rad * std::sin(2.0 * M_PI * u2);
    }
    double n = 0.0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    if (n == 0.0) {
        v[0] = 1.0;
        n = 1.0;
    }
    for (double& x : v) x /= n;
    return v;
}

std::vector<Complex> to_complex(const std::vector<double>& v) {
    std::vector<Complex> z(v.size() / 2);
    for (size_t j = 0; j < z.size(); ++j) z[j] = Complex(v[2 * j], v[2 * j + 1]);
    return z;
}

Poly partial_derivative(const Poly& f, int j) {
    Poly out(f.dim());
    for (const auto& [a, c] : f.terms()) {
        if (a[static_cast<size_t>(j)] == 0) continue;
        MultiIndex b = a;
        b[static_cast<size_t>(j)] -= 1;
        out.set_coeff(b, out.coeff(b) + c * static_cast<double>(a[static_cast<size_t>(j)]));
    }
    return out;
}

}  // namespace

SphereSupResult sphere_sup(const Poly& f, long budget) {
    if (budget < 1) throw std::invalid_argument("sphere_sup: budget must be >= 1");
    const int d = f.dim();
    if (d < 1 || f.is_zero()) return {0.0, std::vector<Complex>(static_cast<size_t>(std::max(d, 1)), 0.0)};
    if (2 * d > static_cast<int>(sizeof(kPrimes) / sizeof(int)))
        throw std::invalid_argument("sphere_sup: dimension too large for the sampler");

    std::vector<Poly> grads;
    for (int j = 0; j < d; ++j) grads.push_back(partial_derivative(f, j));

    auto value = [&](const std::vector<double>& v) {
        return std::abs(evaluate(f, to_complex(v)));
    };

    // sampling pass, keeping the best starts
    struct Start {
        double val;
        std::vector<double> v;
    };
    std::vector<Start> starts;
    for (long s = 0; s < budget; ++s) {
        auto v = sphere_point(s, d);
        starts.push_back({value(v), std::move(v)});
    }
    std::sort(starts.begin(), starts.end(),
              [](const Start& a, const Start& b) { return a.val > b.val; });
    const size_t nstarts = std::min<size_t>(8, starts.size());

    double best = starts.front().val;
    std::vector<double> best_v = starts.front().v;

    for (size_t s = 0; s < nstarts; ++s) {
        std::vector<double> v = starts[s].v;
        double fv = starts[s].val * starts[s].val;
        double step = 0.5;
        for (int it = 0; it < 400 && step > 1e-8; ++it) {
            auto z = to_complex(v);
            Complex fz = evaluate(f, z);
            // gradient of |f|^2 in the 2d real coordinates
            std::vector<double> g(static_cast<size_t>(2 * d));
            for (int j = 0; j < d; ++j) {
                Complex w = std::conj(fz) * evaluate(grads[static_cast<size_t>(j)], z);
                g[static_cast<size_t>(2 * j)] = 2.0 * w.real();
                g[static_cast<size_t>(2 * j + 1)] = -2.0 * w.imag();
            }
            // project onto the tangent space of the sphere
            double dot = 0.0;
            for (size_t i = 0; i < g.size(); ++i) dot += g[i] * v[i];
            double gn = 0.0;
            for (size_t i = 0; i < g.size(); ++i) {
                g[i] -= dot * v[i];
                gn += g[i] * g[i];
            }
            gn = std::sqrt(gn);
            if (gn < 1e-14) break;
            std::vector<double> cand(v.size());
            double cn = 0.0;
            for (size_t i = 0; i < v.size(); ++i) {
                cand[i] = v[i] + step * g[i] / gn;
                cn += cand[i] * cand[i];
            }
            cn = std::sqrt(cn);
            for (double& x : cand) x /= cn;
            double cv = value(cand);
            if (cv * cv > fv) {
                v = std::move(cand);
                fv = cv * cv;
            } else {
                step *= 0.5;
            }
        }
        double final_val = value(v);
        if (final_val > best) {
            best = final_val;
            best_v = v;
        }
    }
    return {best, to_complex(best_v)};
}

}  // namespace dshift
