#ifndef GGM_COV_MODEL_HPP
#define GGM_COV_MODEL_HPP

#include <Eigen/Dense>
#include <string>

#include "ggm/data_matrix.hpp"
#include "ggm/graph.hpp"
#include "ggm/rng.hpp"

namespace ggm {

// Population covariance / precision pair with the conditional-independence
// graph read off the sparsity pattern of the precision matrix. An entry
// counts as zero when |omega_ij| < 1e-10 * sqrt(omega_ii * omega_jj).
class CovModel {
  public:
    static CovModel from_covariance(Eigen::MatrixXd sigma);
    static CovModel from_precision(Eigen::MatrixXd omega);

    int p() const { return static_cast<int>(sigma_.rows()); }
    const Eigen::MatrixXd& sigma() const { return sigma_; }
    const Eigen::MatrixXd& omega() const { return omega_; }
    const Graph& true_graph() const { return graph_; }

    static CovModel from_json_file(const std::string& path);
    void to_json_file(const std::string& path) const;

  private:
    CovModel(Eigen::MatrixXd sigma, Eigen::MatrixXd omega);

    Eigen::MatrixXd sigma_;
    Eigen::MatrixXd omega_;
    Graph graph_;
};

// n i.i.d. rows from N_p(0, sigma) through the Cholesky factor of sigma.
DataMatrix sample_gaussian(const CovModel& model, int n, RngSeed rng, bool center = true);

}  // namespace ggm

#endif
