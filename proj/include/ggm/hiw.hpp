#ifndef GGM_HIW_HPP
#define GGM_HIW_HPP

#include <mutex>
#include <unordered_map>

#include "ggm/chordal.hpp"
#include "ggm/data_matrix.hpp"
#include "ggm/graph.hpp"
#include "ggm/stats.hpp"

namespace ggm {

// Hyperparameters of the scoring model: degrees of freedom b, g-prior scale
// (the prior scale matrix is g * Y'Y), and the Bernoulli edge-inclusion
// probability q of the graph prior.
struct ModelParams {
    double b = 3.0;
    double g = 0.0;  // must be set; see for_data
    double q = 0.5;

    void validate() const {
        if (!(b > 2.0)) throw InvalidParams("degrees of freedom b must exceed 2");
        if (!(g > 0.0 && g < 1.0)) throw InvalidParams("g must lie in (0,1)");
        if (!(q > 0.0 && q < 1.0)) throw InvalidParams("q must lie in (0,1)");
    }

    // Defaults: b = 3, g = 1/n, and q = 2/(p-1) unless overridden.
    static ModelParams for_data(const DataMatrix& d, double b = 3.0, double q = -1.0) {
        ModelParams mp;
        mp.b = b;
        mp.g = 1.0 / d.n();
        mp.q = q > 0.0 ? q : (d.p() > 3 ? 2.0 / (d.p() - 1) : 0.5);
        mp.validate();
        return mp;
    }
};

// Prior edge probability schedule q = exp(-c_q * n^gamma) for growing-p
// experiments, clamped away from 0 and 1.
double q_schedule(int n, double c_q, double gamma);

struct GraphScore {
    Graph graph;
    double log_ml = 0.0;
    double log_prior = 0.0;
    double log_post = 0.0;
};

struct LocalMove {
    Edge edge{};
    MoveKind kind = MoveKind::add;
    VertexSet separator;
    int d_s = 0;
    double rho_hat = 0.0;
    double log_bf = 0.0;  // log BF of the move: new graph vs old graph
};

// log w(C) of a clique or separator under the g-prior scale g * Y'Y,
// entirely in log space. w(empty) = 1.
double log_w(const DataMatrix& d, VertexSet c, const ModelParams& params);

// log f(Y|G) = -(np/2) log 2pi + sum_cliques log w - sum_separators log w.
double log_marginal_likelihood(const DataMatrix& d, const Graph& g, const ModelParams& params);

// Bernoulli edge prior restricted to decomposable graphs, up to the shared
// normalizing constant; -inf for non-decomposable graphs.
double log_graph_prior(const Graph& g, const ModelParams& params);

double log_bayes_factor(const DataMatrix& d, const Graph& g_a, const Graph& g_b, const ModelParams& params);

double log_posterior_ratio(const DataMatrix& d, const Graph& g_a, const Graph& g_b, const ModelParams& params);

// Exact single-edge-move Bayes factor from the move separator S and the
// Gram-based partial correlation of the endpoints given S. Equals the
// difference of the global log marginal likelihoods.
LocalMove local_log_bf(const DataMatrix& d, const Graph& g, Edge e, MoveKind kind, const ModelParams& params);

// Strict lower/upper bounds on the local move's log Bayes factor obtained by
// bounding the gamma ratio.
struct LocalMoveBounds {
    double lower;
    double upper;
};
LocalMoveBounds local_log_bf_bounds(const LocalMove& move, int n, const ModelParams& params);

GraphScore score_graph(const DataMatrix& d, const Graph& g, const ModelParams& params);

// Memoizing evaluator for repeated scoring against one dataset. The clique
// cache is keyed by vertex mask and guarded by a mutex, so one scorer can be
// shared across threads; results are identical with or without the cache.
class HiwScorer {
  public:
    HiwScorer(const DataMatrix& d, ModelParams params) : d_(d), params_(params) { params_.validate(); }

    const ModelParams& params() const { return params_; }
    const DataMatrix& data() const { return d_; }

    double log_w_cached(VertexSet c) const;
    double log_marginal_likelihood(const Graph& g) const;
    double log_posterior(const Graph& g) const;  // log_ml + log_prior

  private:
    const DataMatrix& d_;
    ModelParams params_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::uint64_t, double> cache_;
};

}  // namespace ggm

#endif
