#include "ggm/cov_model.hpp"

#include <fstream>

#include "json.hpp"

namespace ggm {

namespace {

Graph graph_from_precision(const Eigen::MatrixXd& omega) {
    const int p = static_cast<int>(omega.rows());
    Graph g(p);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (std::abs(omega(i, j)) >= 1e-10 * std::sqrt(omega(i, i) * omega(j, j))) g = g.with_edge(i, j);
    return g;
}

Eigen::MatrixXd checked_inverse(const Eigen::MatrixXd& m, const char* what) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) throw NotPositiveDefinite(std::string(what) + " matrix is not positive definite");
    return llt.solve(Eigen::MatrixXd::Identity(m.rows(), m.cols()));
}

}  // namespace

CovModel::CovModel(Eigen::MatrixXd sigma, Eigen::MatrixXd omega)
    : sigma_(std::move(sigma)), omega_(std::move(omega)), graph_(graph_from_precision(omega_)) {
    if (sigma_.rows() != sigma_.cols()) throw InvalidParams("covariance matrix must be square");
    const double err = (sigma_ * omega_ - Eigen::MatrixXd::Identity(sigma_.rows(), sigma_.cols())).cwiseAbs().maxCoeff();
    if (err > 1e-10) throw InvalidParams("sigma * omega deviates from identity");
}

CovModel CovModel::from_covariance(Eigen::MatrixXd sigma) {
    Eigen::MatrixXd omega = checked_inverse(sigma, "covariance");
    return CovModel(std::move(sigma), std::move(omega));
}

CovModel CovModel::from_precision(Eigen::MatrixXd omega) {
    Eigen::MatrixXd sigma = checked_inverse(omega, "precision");
    return CovModel(std::move(sigma), std::move(omega));
}

CovModel CovModel::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open model file: " + path);
    nlohmann::json j;
    in >> j;
    if (!j.contains("sigma")) throw DataError("model file lacks a \"sigma\" entry: " + path);
    const auto& rows = j.at("sigma");
    const int p = static_cast<int>(rows.size());
    Eigen::MatrixXd sigma(p, p);
    for (int i = 0; i < p; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != p) throw DataError("\"sigma\" is not square");
        for (int k = 0; k < p; ++k) sigma(i, k) = rows[static_cast<size_t>(i)][static_cast<size_t>(k)].get<double>();
    }
    return from_covariance(std::move(sigma));
}

void CovModel::to_json_file(const std::string& path) const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < p(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < p(); ++k) row.push_back(sigma_(i, k));
        rows.push_back(row);
    }
    nlohmann::json labels = nlohmann::json::array();
    for (int i = 1; i <= p(); ++i) labels.push_back(std::to_string(i));
    std::ofstream out(path);
    if (!out) throw DataError("cannot write model file: " + path);
    out << nlohmann::json{{"sigma", rows}, {"labels", labels}}.dump(2) << "\n";
}

DataMatrix sample_gaussian(const CovModel& model, int n, RngSeed seed, bool center) {
    if (n < 1) throw InvalidParams("sample count must be positive");
    Eigen::LLT<Eigen::MatrixXd> llt(model.sigma());
    if (llt.info() != Eigen::Success) throw NotPositiveDefinite();
    const Eigen::MatrixXd l = llt.matrixL();

    Rng rng(seed);
    const int p = model.p();
    Eigen::MatrixXd z(n, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) z(i, j) = rng.normal();
    return DataMatrix(z * l.transpose(), center);
}

}  // namespace ggm
