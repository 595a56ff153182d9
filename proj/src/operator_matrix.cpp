#include "dshift/operator_matrix.hpp"

#include <stdexcept>

#include <json.hpp>

namespace dshift {

OperatorMatrix::OperatorMatrix(BasisPtr b, Matrix m) : basis(std::move(b)), mat(std::move(m)) {
    if (!basis) throw std::invalid_argument("OperatorMatrix: null basis");
    if (mat.rows() != mat.cols() || mat.rows() != basis->size())
        throw std::invalid_argument("OperatorMatrix: matrix side must equal basis size");
}

std::string OperatorMatrix::to_json() const {
    nlohmann::json j;
    j["d"] = basis->dim();
    j["N"] = basis->max_degree();
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < mat.cols(); ++c)
            row.push_back({mat(r, c).real(), mat(r, c).imag()});
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j.dump();
}

OperatorMatrix OperatorMatrix::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    auto basis = build_basis(j.at("d").get<int>(), j.at("N").get<int>());
    const auto& rows = j.at("entries");
    Matrix m(basis->size(), basis->size());
    if (static_cast<int>(rows.size()) != basis->size())
        throw std::invalid_argument("OperatorMatrix::from_json: row count mismatch");
    for (int r = 0; r < basis->size(); ++r) {
        const auto& row = rows[static_cast<size_t>(r)];
        if (static_cast<int>(row.size()) != basis->size())
            throw std::invalid_argument("OperatorMatrix::from_json: column count mismatch");
        for (int c = 0; c < basis->size(); ++c)
            m(r, c) = std::complex<double>(row[static_cast<size_t>(c)][0].get<double>(),
                                           row[static_cast<size_t>(c)][1].get<double>());
    }
    return OperatorMatrix(basis, std::move(m));
}

}  // namespace dshift
