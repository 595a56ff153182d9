#include "dshift/dilation.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "dshift/numerics.hpp"
#include "dshift/shift.hpp"

namespace dshift {

std::string DContraction::to_json() const {
    nlohmann::json j;
    j["d"] = d;
    j["m"] = space_dim();
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& op : ops) {
        nlohmann::json flat = nlohmann::json::array();
        for (Eigen::Index r = 0; r < op.rows(); ++r)
            for (Eigen::Index c = 0; c < op.cols(); ++c)
                flat.push_back({op(r, c).real(), op(r, c).imag()});
        mats.push_back(std::move(flat));
    }
    j["matrices"] = std::move(mats);
    return j.dump();
}

DContraction DContraction::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const int d = j.at("d").get<int>();
    const int m = j.at("m").get<int>();
    const auto& mats = j.at("matrices");
    if (static_cast<int>(mats.size()) != d)
        throw std::invalid_argument("DContraction::from_json: expected d matrices");
    std::vector<Matrix> ops;
    for (const auto& flat : mats) {
        if (static_cast<int>(flat.size()) != m * m)
            throw std::invalid_argument("DContraction::from_json: matrix size mismatch");
        Matrix op(m, m);
        size_t idx = 0;
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c, ++idx)
                op(r, c) = Complex(flat[idx][0].get<double>(), flat[idx][1].get<double>());
        ops.push_back(std::move(op));
    }
    return validate(d, std::move(ops));
}

DContraction validate(int d, std::vector<Matrix> ops) {
    if (d < 1 || static_cast<int>(ops.size()) != d)
        throw std::invalid_argument("validate: expected d >= 1 matrices");
    const Eigen::Index m = ops.front().rows();
    for (const auto& op : ops)
        if (op.rows() != m || op.cols() != m)
            throw std::invalid_argument("validate: matrices must be square and of equal size");

    std::vector<double> norms;
    for (const auto& op : ops) norms.push_back(operator_norm(op).value);

    double worst = 0.0;
    int wi = 0, wj = 0;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            Matrix comm = ops[static_cast<size_t>(i)] * ops[static_cast<size_t>(j)] -
                          ops[static_cast<size_t>(j)] * ops[static_cast<size_t>(i)];
            double rel = operator_norm(comm).value /
                         std::max(1.0, norms[static_cast<size_t>(i)] * norms[static_cast<size_t>(j)]);
            if (rel > worst) {
                worst = rel;
                wi = i + 1;
                wj = j + 1;
            }
        }
    }
    if (worst > 1e-10) {
        std::ostringstream os;
        os << "NonCommuting: pair (" << wi << "," << wj << ") residual " << worst;
        throw ValidationError(os.str());
    }

    Matrix row = Matrix::Zero(m, m);
    for (const auto& op : ops) row += op * op.adjoint();
    double rn = operator_norm(row).value;
    if (rn > 1.0 + 1e-10) {
        std::ostringstream os;
        os << "RowNormExceeded: row norm " << rn << " exceeds 1 by " << rn - 1.0;
        throw ValidationError(os.str());
    }
    DContraction t;
    t.d = d;
    t.ops = std::move(ops);
    return t;
}

SphericalTuple SphericalTuple::from_points(int d, std::vector<std::vector<Complex>> pts) {
    if (pts.empty()) throw std::invalid_argument("SphericalTuple: no points");
    for (const auto& p : pts) {
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("SphericalTuple: point dimension mismatch");
        double n = 0.0;
        for (const auto& c : p) n += std::norm(c);
        if (std::abs(n - 1.0) > 1e-12)
            throw std::invalid_argument("SphericalTuple: point not on the unit sphere");
    }
    SphericalTuple z;
    z.d = d;
    z.points = std::move(pts);
    return z;
}

DContraction SphericalTuple::as_contraction() const {
    const int s = static_cast<int>(points.size());
    std::vector<Matrix> ops;
    for (int k = 0; k < d; ++k) {
        Matrix zk = Matrix::Zero(s, s);
        for (int i = 0; i < s; ++i) zk(i, i) = points[static_cast<size_t>(i)][static_cast<size_t>(k)];
        ops.push_back(std::move(zk));
    }
    return validate(d, std::move(ops));
}

DefectResult defect(const DContraction& t) {
    const int m = t.space_dim();
    Matrix dd = Matrix::Identity(m, m);
    for (const auto& op : t.ops) dd -= op * op.adjoint();
    Eigen::SelfAdjointEigenSolver<Matrix> es(dd);
    Eigen::VectorXd ev = es.eigenvalues();
    std::vector<int> kept;
    for (int i = 0; i < m; ++i) {
        if (ev[i] < -1e-10)
            throw ValidationError("defect: defect operator has a negative eigenvalue");
        if (ev[i] < 0.0) ev[i] = 0.0;  // numerical PSD drift
        if (ev[i] > 1e-10) kept.push_back(i);
    }
    DefectResult r;
    r.delta = es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
    r.rank = static_cast<int>(kept.size());
    r.k_basis = Matrix(m, r.rank);
    for (int c = 0; c < r.rank; ++c) r.k_basis.col(c) = es.eigenvectors().col(kept[static_cast<size_t>(c)]);
    return r;
}

AInfinityResult a_infinity(const DContraction& t, int maxiter) {
    const int m = t.space_dim();
    AInfinityResult r;
    Matrix a = Matrix::Identity(m, m);
    for (int it = 1; it <= maxiter; ++it) {
        Matrix next = Matrix::Zero(m, m);
        for (const auto& op : t.ops) next += op * a * op.adjoint();
        if (min_eigenvalue_hermitian(Matrix(a - next)) < -1e-10)
            throw ValidationError("a_infinity: iteration not monotone nonincreasing");
        double step = operator_norm(Matrix(a - next)).value;
        a = std::move(next);
        r.iterations = it;
        r.last_norm = operator_norm(a).value;
        r.last_step = step;
        if (r.last_norm < 1e-10) {
            r.verdict = NullVerdict::Null;
            break;
        }
        if (step < 1e-12) {
            r.verdict = NullVerdict::NonNull;
            break;
        }
    }
    r.a = std::move(a);
    return r;
}

DilationResult build_L(const DContraction& t, int fock_degree) {
    DilationResult out;
    auto basis = build_basis(t.d, fock_degree);
    DefectResult df = defect(t);
    const int m = t.space_dim();
    const int r = df.rank;
    const int b = basis->size();
    if (static_cast<long>(b) * r > 2000000)
        throw std::length_error("build_L: Fock truncation tensor defect space too large");

    // C_alpha = T^alpha Delta restricted to the defect space, built
    // recursively down the graded order
    std::vector<Matrix> cols(static_cast<size_t>(b));
    cols[0] = df.delta * df.k_basis;
    for (int i = 1; i < b; ++i) {
        const MultiIndex& alpha = basis->at(i);
        int j = 0;
        while (alpha[static_cast<size_t>(j)] == 0) ++j;
        MultiIndex prev = alpha;
        prev[static_cast<size_t>(j)] -= 1;
        cols[static_cast<size_t>(i)] =
            t.ops[static_cast<size_t>(j)] * cols[static_cast<size_t>(basis->position(prev))];
    }

    Matrix l(m, static_cast<Eigen::Index>(b) * r);
    for (int i = 0; i < b; ++i)
        l.block(0, static_cast<Eigen::Index>(i) * r, m, r) =
            cols[static_cast<size_t>(i)] / basis->sqrt_weight(i);

    out.delta = std::move(df.delta);
    out.defect_rank = r;
    out.fock_basis = basis;
    out.l_norm = operator_norm(l).value;
    Matrix gram = Matrix::Identity(m, m) - l * l.adjoint();
    out.coisometry_residual = operator_norm(gram).value;

    // tail ||P^{N+1}(1)||
    Matrix a = Matrix::Identity(m, m);
    for (int it = 0; it <= fock_degree; ++it) {
        Matrix next = Matrix::Zero(m, m);
        for (const auto& op : t.ops) next += op * a * op.adjoint();
        a = std::move(next);
    }
    out.tail_bound = operator_norm(a).value;
    out.l = std::move(l);
    return out;
}

Matrix amorphism_apply(const DilationResult& dil, const OperatorMatrix& x) {
    if (!dil.fock_basis || x.basis->dim() != dil.fock_basis->dim() ||
        x.basis->max_degree() != dil.fock_basis->max_degree())
        throw std::invalid_argument("amorphism_apply: operator lives on a different basis");
    const int b = dil.fock_basis->size();
    const int r = dil.defect_rank;
    const Eigen::Index m = dil.l.rows();
    Matrix out = Matrix::Zero(m, m);
    // slice L by defect coordinate: L(X (x) 1) L^* = sum_k L_k X L_k^*
    for (int k = 0; k < r; ++k) {
        Matrix lk(m, b);
        for (int i = 0; i < b; ++i) lk.col(i) = dil.l.col(static_cast<Eigen::Index>(i) * r + k);
        out += lk * x.mat * lk.adjoint();
    }
    return out;
}

Matrix evaluate_tuple(const Poly& f, const DContraction& t) {
    const int m = t.space_dim();
    if (!f.is_zero() && f.dim() != t.d)
        throw std::invalid_argument("evaluate_tuple: dimension mismatch");
    Matrix out = Matrix::Zero(m, m);
    for (const auto& [alpha, c] : f.terms()) {
        Matrix term = Matrix::Identity(m, m);
        for (size_t j = 0; j < alpha.size(); ++j)
            for (int p = 0; p < alpha[j]; ++p) term = term * t.ops[j];
        out += c * term;
    }
    return out;
}

VnReport vn_check(const DContraction& t, const Poly& f, int fock_degree) {
    if (f.degree() > fock_degree)
        throw std::invalid_argument("vn_check: degree(f) exceeds the truncation");
    VnReport r;
    r.lhs = operator_norm(evaluate_tuple(f, t)).value;
    auto basis = build_basis(t.d, fock_degree);
    r.rhs = operator_norm(multiplication_matrix(f, basis)).value;
    int half = std::max(f.degree(), fock_degree / 2);
    auto basis_half = build_basis(t.d, std::max(half, 0));
    r.rhs_half = operator_norm(multiplication_matrix(f, basis_half)).value;
    r.margin = r.rhs - r.lhs;
    return r;
}

DContraction model_compress(int d, int multiplicity, const std::optional<SphericalTuple>& z,
                            const Matrix& coinvariant_basis, int fock_degree) {
    if (d < 1) throw std::invalid_argument("model_compress: d must be >= 1");
    if (multiplicity < 0) throw std::invalid_argument("model_compress: negative multiplicity");
    if (multiplicity == 0 && !z)
        throw std::invalid_argument("model_compress: empty model");
    if (z && z->d != d)
        throw std::invalid_argument("model_compress: spherical tuple dimension mismatch");

    std::vector<Matrix> shifts;
    int b = 0;
    BasisPtr basis;
    if (multiplicity > 0) {
        basis = build_basis(d, fock_degree);
        b = basis->size();
        for (int k = 1; k <= d; ++k) shifts.push_back(shift_matrix(k, basis).mat);
    }
    const int s = z ? static_cast<int>(z->points.size()) : 0;
    const int total = multiplicity * b + s;
    if (coinvariant_basis.rows() != total)
        throw std::invalid_argument("model_compress: subspace basis has wrong ambient dimension");
    const int kdim = static_cast<int>(coinvariant_basis.cols());
    if (kdim == 0) throw std::invalid_argument("model_compress: degenerate zero subspace");

    const Matrix& q = coinvariant_basis;
    if ((q.adjoint() * q - Matrix::Identity(kdim, kdim)).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("model_compress: subspace columns not orthonormal");

    std::vector<Matrix> amb;
    for (int k = 0; k < d; ++k) {
        Matrix a = Matrix::Zero(total, total);
        for (int copy = 0; copy < multiplicity; ++copy)
            a.block(copy * b, copy * b, b, b) = shifts[static_cast<size_t>(k)];
        if (z)
            for (int i = 0; i < s; ++i)
                a(multiplicity * b + i, multiplicity * b + i) =
                    z->points[static_cast<size_t>(i)][static_cast<size_t>(k)];
        amb.push_back(std::move(a));
    }

    // co-invariance: adjoints must map the subspace into itself
    for (int k = 0; k < d; ++k) {
        Matrix leak = (Matrix::Identity(total, total) - q * q.adjoint()) *
                      (amb[static_cast<size_t>(k)].adjoint() * q);
        double res = operator_norm(leak).value;
        if (res > 1e-10) {
            std::ostringstream os;
            os << "model_compress: subspace not co-invariant under coordinate " << k + 1
               << ", residual " << res;
            throw ValidationError(os.str());
        }
    }

    std::vector<Matrix> compressed;
    for (int k = 0; k < d; ++k)
        compressed.push_back(q.adjoint() * amb[static_cast<size_t>(k)] * q);
    return validate(d, std::move(compressed));
}

}  // namespace dshift
