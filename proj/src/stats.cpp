#include "ggm/stats.hpp"

#include <cmath>

namespace ggm {

namespace {

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = 0; b < cols.size(); ++b) out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = m(rows[a], cols[b]);
    return out;
}

}  // namespace

double partial_correlation_of_moments(const Eigen::MatrixXd& m, int i, int j, VertexSet s) {
    if (s.contains(i) || s.contains(j)) throw InvalidParams("conditioning set must exclude both variables");
    if (i == j) throw InvalidParams("variables must be distinct");
    const int p = static_cast<int>(m.rows());
    if (i < 0 || j < 0 || i >= p || j >= p || !s.subset_of(VertexSet::full(p)))
        throw InvalidParams("variable index outside the matrix");
    double mii = m(i, i), mjj = m(j, j), mij = m(i, j);
    if (!s.empty()) {
        const std::vector<int> sv = s.to_vector();
        Eigen::MatrixXd mss = submatrix(m, sv, sv);
        Eigen::LLT<Eigen::MatrixXd> llt(mss);
        if (llt.info() != Eigen::Success) throw SingularConditioningSet();
        Eigen::VectorXd msi = submatrix(m, sv, {i});
        Eigen::VectorXd msj = submatrix(m, sv, {j});
        Eigen::VectorXd solved_i = llt.solve(msi);
        mii -= msi.dot(solved_i);
        mij -= msj.dot(solved_i);
        mjj -= msj.dot(llt.solve(msj));
    }
    if (!(mii > 0.0) || !(mjj > 0.0)) {
        if (s.empty()) throw DegenerateColumn();
        throw SingularConditioningSet("residual variance vanished after conditioning");
    }
    return mij / std::sqrt(mii * mjj);
}

double sample_correlation(const DataMatrix& d, int i, int j) {
    return partial_correlation_of_moments(d.centered_gram(), i, j, VertexSet());
}

double sample_partial_correlation(const DataMatrix& d, int i, int j, VertexSet s) {
    if (d.n() <= s.size() + 2) throw CliqueTooLargeForSampleSize("need n > |s| + 2 for a partial correlation");
    return partial_correlation_of_moments(d.centered_gram(), i, j, s);
}

double population_correlation(const CovModel& model, int i, int j) {
    return partial_correlation_of_moments(model.sigma(), i, j, VertexSet());
}

double population_partial_correlation(const CovModel& model, int i, int j, VertexSet s) {
    return partial_correlation_of_moments(model.sigma(), i, j, s);
}

double log_det_gram(const DataMatrix& d, VertexSet c) {
    if (c.empty()) return 0.0;
    if (d.n() <= c.size()) throw CliqueTooLargeForSampleSize();
    const std::vector<int> cv = c.to_vector();
    Eigen::MatrixXd sub = submatrix(d.gram(), cv, cv);
    Eigen::LLT<Eigen::MatrixXd> llt(sub);
    if (llt.info() != Eigen::Success) throw SingularGram();
    double logdet = 0.0;
    const auto& l = llt.matrixLLT();
    for (Eigen::Index k = 0; k < sub.rows(); ++k) logdet += 2.0 * std::log(l(k, k));
    return logdet;
}

AssumptionDiagnostics assumption_diagnostics(const CovModel& model) {
    const Graph& g = model.true_graph();
    if (g.edge_count() == 0) throw EmptyGraph("diagnostics are undefined for an empty true graph");
    AssumptionDiagnostics out;
    out.rho_l = 1.0;
    out.rho_u = 0.0;
    out.n_edges = g.edge_count();
    const VertexSet all = VertexSet::full(model.p());
    for (const auto& [i, j] : g.edges()) {
        const double r = std::abs(population_partial_correlation(model, i, j, all - VertexSet({i, j})));
        out.rho_l = std::min(out.rho_l, r);
        out.rho_u = std::max(out.rho_u, r);
    }
    return out;
}

}  // namespace ggm
