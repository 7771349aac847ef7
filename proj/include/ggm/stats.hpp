#ifndef GGM_STATS_HPP
#define GGM_STATS_HPP

#include <Eigen/Dense>

#include "ggm/cov_model.hpp"
#include "ggm/data_matrix.hpp"
#include "ggm/vertex_set.hpp"

namespace ggm {

double sample_correlation(const DataMatrix& d, int i, int j);

// Sample partial correlation of columns i and j given the columns in s,
// through Schur complements of the centered Gram matrix. s empty reduces to
// the plain sample correlation.
double sample_partial_correlation(const DataMatrix& d, int i, int j, VertexSet s);

double population_correlation(const CovModel& model, int i, int j);

double population_partial_correlation(const CovModel& model, int i, int j, VertexSet s);

// log |Y_c' Y_c| of the stored-value Gram submatrix via Cholesky; 0 for the
// empty set.
double log_det_gram(const DataMatrix& d, VertexSet c);

// Same Schur-complement quantities on an arbitrary moment matrix. Shared by
// the sample/population paths and by the local Bayes factor, which must use
// the exact Gram matrix the marginal likelihood uses.
double partial_correlation_of_moments(const Eigen::MatrixXd& m, int i, int j, VertexSet s);

struct AssumptionDiagnostics {
    double rho_l = 0.0;  // smallest |partial correlation given all others| over true edges
    double rho_u = 0.0;  // largest
    int n_edges = 0;
};

AssumptionDiagnostics assumption_diagnostics(const CovModel& model);

}  // namespace ggm

#endif
