#ifndef GGM_DATA_MATRIX_HPP
#define GGM_DATA_MATRIX_HPP

#include <Eigen/Dense>
#include <string>

#include "ggm/errors.hpp"
#include "ggm/vertex_set.hpp"

namespace ggm {

// n x p observation matrix. Columns are mean-centered on ingestion by
// default; the Gram matrix Y'Y of the stored values is computed once and
// shared by all scoring code. The correlation definitions always subtract
// column means, so they read through centered_gram(), which is the same
// object when the data were centered on ingestion.
class DataMatrix {
  public:
    explicit DataMatrix(Eigen::MatrixXd values, bool center = true);

    int n() const { return static_cast<int>(values_.rows()); }
    int p() const { return static_cast<int>(values_.cols()); }
    bool centered() const { return centered_; }

    const Eigen::MatrixXd& values() const { return values_; }
    const Eigen::MatrixXd& gram() const { return gram_; }
    const Eigen::MatrixXd& centered_gram() const { return centered_ ? gram_ : centered_gram_; }

    static DataMatrix from_csv(const std::string& path, bool center = true);
    void to_csv(const std::string& path) const;

  private:
    Eigen::MatrixXd values_;
    bool centered_;
    Eigen::MatrixXd gram_;
    Eigen::MatrixXd centered_gram_;  // filled only when centered_ is false
};

}  // namespace ggm

#endif
