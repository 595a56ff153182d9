#ifndef DSHIFT_OPERATOR_MATRIX_HPP
#define DSHIFT_OPERATOR_MATRIX_HPP

#include <string>

#include <Eigen/Dense>

#include "dshift/basis.hpp"

namespace dshift {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense complex square matrix tagged with the truncated basis it acts on.
struct OperatorMatrix {
    BasisPtr basis;
    Matrix mat;

    OperatorMatrix() = default;
    OperatorMatrix(BasisPtr b, Matrix m);

    int size() const { return static_cast<int>(mat.rows()); }

    /// JSON with basis descriptor (d, N) and row-major [re, im] entries.
    std::string to_json() const;
    static OperatorMatrix from_json(const std::string& text);
};

}  // namespace dshift

#endif
