#include "dshift/shift.hpp"

#include <cmath>
#include <stdexcept>

#include "dshift/numerics.hpp"

namespace dshift {

OperatorMatrix shift_matrix(int k, const BasisPtr& basis) {
    const int d = basis->dim();
    if (k < 1 || k > d) throw std::invalid_argument("shift_matrix: coordinate index out of range");
    Matrix m = Matrix::Zero(basis->size(), basis->size());
    for (int col = 0; col < basis->size(); ++col) {
        MultiIndex alpha = basis->at(col);
        const int n = total_degree(alpha);
        if (n == basis->max_degree()) continue;  // truncation kills the top degree
        alpha[static_cast<size_t>(k - 1)] += 1;
        int row = basis->position(alpha);
        // exact weight ratio w(alpha+e_k)/w(alpha) = (alpha_k+1)/(n+1)
        m(row, col) = std::sqrt(static_cast<double>(
            Rational(alpha[static_cast<size_t>(k - 1)], n + 1)));
    }
    return OperatorMatrix(basis, std::move(m));
}

OperatorMatrix multiplication_matrix(const Poly& f, const BasisPtr& basis) {
    if (f.degree() > basis->max_degree())
        throw std::invalid_argument("multiplication_matrix: degree(f) exceeds truncation");
    if (!f.is_zero() && f.dim() != basis->dim())
        throw std::invalid_argument("multiplication_matrix: dimension mismatch");
    Matrix m = Matrix::Zero(basis->size(), basis->size());
    for (int col = 0; col < basis->size(); ++col) {
        const MultiIndex& beta = basis->at(col);
        for (const auto& [a, c] : f.terms()) {
            MultiIndex gamma = beta;
            for (size_t i = 0; i < gamma.size(); ++i) gamma[i] += a[i];
            int row = basis->position(gamma);
            if (row < 0) continue;
            m(row, col) += c * basis->sqrt_weight(row) / basis->sqrt_weight(col);
        }
    }
    return OperatorMatrix(basis, std::move(m));
}

Vector apply_multiplication(const Poly& f, const BasisPtr& basis, const Vector& v) {
    if (v.size() != basis->size())
        throw std::invalid_argument("apply_multiplication: vector length mismatch");
    Vector out = Vector::Zero(basis->size());
    for (int col = 0; col < basis->size(); ++col) {
        if (v[col] == Complex(0.0)) continue;
        const MultiIndex& beta = basis->at(col);
        for (const auto& [a, c] : f.terms()) {
            MultiIndex gamma = beta;
            for (size_t i = 0; i < gamma.size(); ++i) gamma[i] += a[i];
            int row = basis->position(gamma);
            if (row < 0) continue;
            out[row] += v[col] * c * basis->sqrt_weight(row) / basis->sqrt_weight(col);
        }
    }
    return out;
}

OperatorMatrix number_operator(const BasisPtr& basis) {
    Matrix m = Matrix::Zero(basis->size(), basis->size());
    for (int i = 0; i < basis->size(); ++i) m(i, i) = static_cast<double>(total_degree(basis->at(i)));
    return OperatorMatrix(basis, std::move(m));
}

OperatorMatrix e0_projection(const BasisPtr& basis) {
    Matrix m = Matrix::Zero(basis->size(), basis->size());
    m(0, 0) = 1.0;
    return OperatorMatrix(basis, std::move(m));
}

std::map<std::string, double> relation_residuals(const BasisPtr& basis) {
    const int N = basis->max_degree();
    if (N < 2) throw std::invalid_argument("relation_residuals: need N >= 2 for an interior");
    const int d = basis->dim();
    const int sz = basis->size();
    const int inner = basis->size_through_degree(N - 1);

    std::vector<Matrix> S;
    for (int k = 1; k <= d; ++k) S.push_back(shift_matrix(k, basis).mat);

    Matrix invN = Matrix::Zero(sz, sz);  // (1+N)^{-1}
    for (int i = 0; i < sz; ++i) invN(i, i) = 1.0 / (1.0 + total_degree(basis->at(i)));
    Matrix id = Matrix::Identity(sz, sz);

    std::map<std::string, double> out;

    // self-commutator identity, interior block
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Matrix lhs = S[static_cast<size_t>(i)].adjoint() * S[static_cast<size_t>(j)] -
                         S[static_cast<size_t>(j)] * S[static_cast<size_t>(i)].adjoint();
            Matrix rhs = invN * ((i == j ? 1.0 : 0.0) * id -
                                 S[static_cast<size_t>(j)] * S[static_cast<size_t>(i)].adjoint());
            Matrix res = (lhs - rhs).topLeftCorner(inner, inner);
            out["commutator_identity_" + std::to_string(i + 1) + std::to_string(j + 1)] =
                operator_norm(res).value;
        }
    }

    // sum_k S_k^* S_k = (d + N)(1 + N)^{-1}, interior block
    Matrix colsum = Matrix::Zero(sz, sz);
    for (const auto& s : S) colsum += s.adjoint() * s;
    Matrix target = Matrix::Zero(sz, sz);
    for (int i = 0; i < sz; ++i) {
        double n = static_cast<double>(total_degree(basis->at(i)));
        target(i, i) = (d + n) / (1.0 + n);
    }
    out["column_sum_identity"] =
        operator_norm(Matrix((colsum - target).topLeftCorner(inner, inner))).value;
    // Hermitian PSD, so the norm is the top eigenvalue; the dense solver is
    // far tighter than power iteration on this nearly-degenerate spectrum.
    Eigen::SelfAdjointEigenSolver<Matrix> colsum_eigs(
        Matrix(colsum.topLeftCorner(inner, inner)), Eigen::EigenvaluesOnly);
    out["column_sum_norm"] = colsum_eigs.eigenvalues().maxCoeff();

    // sum_k S_k S_k^* + E_0 = 1, full truncation
    Matrix rowsum = Matrix::Zero(sz, sz);
    for (const auto& s : S) rowsum += s * s.adjoint();
    rowsum(0, 0) += 1.0;
    out["row_sum_identity"] = operator_norm(Matrix(rowsum - id)).value;

    // hyponormality of each coordinate, interior block
    double min_eig = 0.0;
    for (int k = 0; k < d; ++k) {
        Matrix sc = S[static_cast<size_t>(k)].adjoint() * S[static_cast<size_t>(k)] -
                    S[static_cast<size_t>(k)] * S[static_cast<size_t>(k)].adjoint();
        double me = min_eigenvalue_hermitian(Matrix(sc.topLeftCorner(inner, inner)));
        if (k == 0 || me < min_eig) min_eig = me;
    }
    out["hyponormality_min_eig"] = min_eig;
    return out;
}

std::vector<double> pstar_power_diagonal(int d, int n, int maxdeg) {
    if (n < 1) throw std::invalid_argument("pstar_power_diagonal: n must be >= 1");
    std::vector<double> out;
    for (int x = 0; x <= maxdeg; ++x) {
        Rational g = 1;
        for (int k = 1; k <= n; ++k) g *= Rational(x + k + d - 1, x + k);
        out.push_back(static_cast<double>(g));
    }
    return out;
}

OperatorMatrix pstar_power_direct(const BasisPtr& basis, int n) {
    if (n > basis->max_degree())
        throw std::invalid_argument("pstar_power_direct: power exceeds truncation degree");
    const int d = basis->dim();
    std::vector<Matrix> S;
    for (int k = 1; k <= d; ++k) S.push_back(shift_matrix(k, basis).mat);
    Matrix a = Matrix::Identity(basis->size(), basis->size());
    for (int it = 0; it < n; ++it) {
        Matrix next = Matrix::Zero(basis->size(), basis->size());
        for (const auto& s : S) next += s.adjoint() * a * s;
        a = std::move(next);
    }
    return OperatorMatrix(basis, std::move(a));
}

}  // namespace dshift
