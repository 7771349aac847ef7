#ifndef GGM_POSTERIOR_HPP
#define GGM_POSTERIOR_HPP

#include <vector>

#include "ggm/hiw.hpp"
#include "ggm/triangulation.hpp"

namespace ggm {

struct PosteriorEntry {
    Graph graph;
    double log_post;  // unnormalized
    double prob;      // normalized
};

// Fully enumerated posterior over the decomposable graphs on p vertices,
// normalized by log-sum-exp. mode() breaks exact ties toward the smaller
// edge set.
class PosteriorTable {
  public:
    explicit PosteriorTable(std::vector<PosteriorEntry> entries);

    const std::vector<PosteriorEntry>& entries() const { return entries_; }
    const Graph& mode() const { return entries_[mode_index_].graph; }
    double mode_prob() const { return entries_[mode_index_].prob; }

    double prob_of(const Graph& g) const;
    double mass_on(const std::vector<Graph>& graphs) const;

  private:
    std::vector<PosteriorEntry> entries_;
    size_t mode_index_;
};

PosteriorTable exhaustive_posterior(const DataMatrix& d, const ModelParams& params);

// Posterior mass on the minimal triangulations of g_true (which may itself
// be non-decomposable; if decomposable the set is just {g_true}).
double triangulation_mass(const PosteriorTable& table, const Graph& g_true);

}  // namespace ggm

#endif
