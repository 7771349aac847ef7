#include "ggm/posterior.hpp"

#include <cmath>

#include "ggm/special_functions.hpp"

namespace ggm {

PosteriorTable::PosteriorTable(std::vector<PosteriorEntry> entries) : entries_(std::move(entries)), mode_index_(0) {
    if (entries_.empty()) throw InvalidParams("posterior table cannot be empty");
    std::vector<double> logs;
    logs.reserve(entries_.size());
    for (const auto& e : entries_) logs.push_back(e.log_post);
    const double norm = log_sum_exp(logs);
    for (size_t i = 0; i < entries_.size(); ++i) {
        entries_[i].prob = std::exp(entries_[i].log_post - norm);
        const auto& best = entries_[mode_index_];
        if (entries_[i].log_post > best.log_post ||
            (entries_[i].log_post == best.log_post && edge_lex_less(entries_[i].graph, best.graph)))
            mode_index_ = i;
    }
}

double PosteriorTable::prob_of(const Graph& g) const {
    for (const auto& e : entries_)
        if (e.graph == g) return e.prob;
    return 0.0;
}

double PosteriorTable::mass_on(const std::vector<Graph>& graphs) const {
    double total = 0.0;
    for (const Graph& g : graphs) total += prob_of(g);
    return total;
}

PosteriorTable exhaustive_posterior(const DataMatrix& d, const ModelParams& params) {
    if (d.p() > 6) throw TooLarge("exhaustive posterior is limited to 6 variables");
    HiwScorer scorer(d, params);
    std::vector<PosteriorEntry> entries;
    for (const Graph& g : enumerate_decomposable(d.p()))
        entries.push_back({g, scorer.log_posterior(g), 0.0});
    return PosteriorTable(std::move(entries));
}

double triangulation_mass(const PosteriorTable& table, const Graph& g_true) {
    std::vector<Graph> tri;
    for (const Triangulation& t : minimal_triangulations(g_true)) tri.push_back(t.result);
    return table.mass_on(tri);
}

}  // namespace ggm
