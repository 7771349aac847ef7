#ifndef GGM_SPECIAL_FUNCTIONS_HPP
#define GGM_SPECIAL_FUNCTIONS_HPP

#include <vector>

namespace ggm {

// log Gamma_m(a) = m(m-1)/4 log pi + sum_{j=1..m} lgamma(a + (1-j)/2)
double log_multigamma(int m, double a);

// log sum_i exp(xs[i]) with max subtraction; -inf entries are allowed.
double log_sum_exp(const std::vector<double>& xs);

// Regularized incomplete beta I_x(a,b) by continued fraction; feeds the Beta
// CDF used in the distributional checks.
double regularized_incomplete_beta(double a, double b, double x);

double beta_cdf(double x, double a, double b);

// One-sample Kolmogorov-Smirnov distance against a CDF evaluated per sample.
double ks_distance(std::vector<double> samples, const std::vector<double>& cdf_at_sorted_samples);

// Two-sample Kolmogorov-Smirnov distance.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;
};

OlsFit ols_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ggm

#endif
