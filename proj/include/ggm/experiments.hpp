#ifndef GGM_EXPERIMENTS_HPP
#define GGM_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "ggm/cov_model.hpp"
#include "ggm/hiw.hpp"
#include "ggm/special_functions.hpp"

namespace ggm {

// --- fixed simulation models ---

// 3-variable model whose precision couples 1-2 and 2-3 (truth: the path
// 1-2-3); the covariance is the full-precision inverse of the exact entries.
CovModel model3();

// 4-variable model whose precision is the chordless cycle 1-2-3-4-1.
CovModel model4();

struct NamedGraph {
    std::string name;
    Graph graph;
};

// The 8 decomposable graphs on 3 vertices, named by edge content.
std::vector<NamedGraph> graphs3();

// The graphs used in the 4-variable study; "cycle" is the non-decomposable
// truth, "tri13"/"tri24" the two minimal triangulations.
std::vector<NamedGraph> graphs4();

// --- population leading terms ---

// sum over cliques of log|Sigma_C| minus sum over separators of log|Sigma_S|
// for a decomposable graph; equals log|Sigma| whenever Sigma is Markov with
// respect to the graph.
double population_graph_logdet(const CovModel& model, const Graph& g);

// Leading slope of mean log BF(g_a; g_ref) against n, obtained by replacing
// sample partial correlations with their population values along a chain of
// single-edge moves and telescoping.
double population_leading_slope(const CovModel& model, const Graph& g_a, const Graph& g_ref);

// --- reports ---

struct SlopeReport {
    std::string pair;        // "<alternative>_vs_<reference>"
    std::string regressor;   // "n" or "log_n"
    double fitted_slope = 0.0;
    double theoretical_slope = 0.0;
    double relative_error = 0.0;  // |fitted-theoretical|/|theoretical| when theoretical != 0
    double slope_se = 0.0;
    std::vector<int> n_grid;
    int replicates = 0;
};

struct SimOptions {
    std::vector<int> n_grid;
    int replicates = 200;
    double b = 3.0;
    std::uint64_t sample_budget = 2'000'000'000ull;  // total gaussian draws allowed
    int threads = 0;
};

std::vector<int> default_n_grid();  // 100..3000 step 100

struct Sim1Result {
    std::vector<int> n_grid;
    std::vector<std::string> names;                  // alternatives, reference excluded
    std::vector<std::vector<double>> mean_log_bf;    // [alternative][n_index]
    std::vector<SlopeReport> slopes;                 // six vs n, then complete vs log n
    int replicates = 0;
};

Sim1Result sim1_slopes(const SimOptions& opts, RngSeed seed);

struct Sim2Result {
    std::vector<int> n_grid;
    std::vector<std::string> alt_names;  // graphs missing a cycle edge
    // mean log BF(alt; reference) for reference = tri13 then tri24
    std::vector<std::vector<double>> mean_vs_tri13;
    std::vector<std::vector<double>> mean_vs_tri24;
    std::vector<SlopeReport> alt_slopes;  // one per (alt, reference) pair, vs n

    std::vector<double> cross_mean;  // mean log BF(tri24; tri13) per n
    std::vector<double> cross_q05;
    std::vector<double> cross_q95;
    SlopeReport cross_slope;       // vs n; flat when the triangulations are equivalent
    double cross_band_width = 0.0;  // max - min of cross_mean

    std::vector<SlopeReport> complete_slopes;  // BF(complete; tri_i) vs log n
    int replicates = 0;
};

Sim2Result sim2_misspecification(const SimOptions& opts, RngSeed seed);

struct TailCheckReport {
    double rho = 0.0;
    int n = 0;
    int replicates = 0;
    std::vector<double> epsilon_grid;
    std::vector<double> empirical_tail;
    std::vector<double> theoretical_bound;
    std::vector<double> mc_margin;  // 3 * sqrt(p(1-p)/R)
    int violations = 0;
};

// Empirical exceedance of |rho_hat - rho| > eps against the
// 21/(1-|rho|)^2 * exp(-n eps^2/4) / (eps sqrt(n)) envelope.
TailCheckReport tail_bound_check(double rho, int n, int replicates, const std::vector<double>& epsilon_grid,
                                 RngSeed seed, int threads = 0);

struct RateCheckReport {
    int n = 0;
    int d_s = 0;
    int replicates = 0;
    double epsilon = 0.0;
    double m1 = 0.0;  // (eps/(eps+1))^2
    double m2 = 0.0;  // 6 log(5/eps)
    double freq_low = 0.0;   // share of rho_hat^2 < m1/(n-d_s)
    double freq_high = 0.0;  // share of rho_hat^2 > m2/(n-d_s)
    double mc_margin = 0.0;
    bool low_ok = false;
    bool high_ok = false;
    double ks_beta = 0.0;  // KS of rho_hat^2 against Beta(1/2,(n-d_s-2)/2)
};

// Exact-rate constants for a zero partial correlation with d_s conditioning
// variables: both tail frequencies must stay below epsilon plus Monte-Carlo
// margin, and rho_hat^2 matches its Beta law.
RateCheckReport exact_rate_check(int n, int d_s, int replicates, double epsilon, RngSeed seed, int threads = 0);

}  // namespace ggm

#endif
