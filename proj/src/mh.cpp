#include "ggm/mh.hpp"

#include <cmath>
#include <future>

namespace ggm {

ChainState mh_search(const DataMatrix& d, const ModelParams& params, const MhOptions& opts, RngSeed seed) {
    if (d.p() < 2) throw InvalidParams("search needs at least 2 variables");
    HiwScorer scorer(d, params);
    Rng rng(seed);

    Graph start(d.p());
    ChainState state{start, scorer.log_posterior(start), start, 0.0, 0, 0};
    state.best_log_post = state.log_post;

    std::vector<EdgeMove> moves = legal_moves(state.current);
    for (std::uint64_t it = 0; it < opts.iters; ++it) {
        const EdgeMove& mv = moves[static_cast<size_t>(rng.uniform_int(moves.size()))];
        Graph proposed = mv.kind == MoveKind::add ? state.current.with_edge(mv.edge.first, mv.edge.second)
                                                  : state.current.without_edge(mv.edge.first, mv.edge.second);
        if (!is_decomposable(proposed)) throw std::logic_error("proposal left the decomposable space");

        std::vector<EdgeMove> proposed_moves = legal_moves(proposed);
        const double proposed_log_post = scorer.log_posterior(proposed);
        const double log_ratio = proposed_log_post - state.log_post +
                                 std::log(static_cast<double>(moves.size())) -
                                 std::log(static_cast<double>(proposed_moves.size()));
        if (std::log(rng.uniform()) < log_ratio) {
            state.current = std::move(proposed);
            state.log_post = proposed_log_post;
            moves = std::move(proposed_moves);
            ++state.acceptance_count;
            if (state.log_post > state.best_log_post ||
                (state.log_post == state.best_log_post && edge_lex_less(state.current, state.best_seen))) {
                state.best_seen = state.current;
                state.best_log_post = state.log_post;
            }
        }
        ++state.iteration;
        if (opts.on_state) opts.on_state(state.current);
    }
    return state;
}

ChainState mh_search_chains(const DataMatrix& d, const ModelParams& params, std::uint64_t iters, int chains,
                            RngSeed seed) {
    if (chains < 1) throw InvalidParams("need at least one chain");
    std::vector<std::future<ChainState>> futures;
    futures.reserve(static_cast<size_t>(chains));
    for (int c = 0; c < chains; ++c) {
        RngSeed s = seed.with_stream(seed.stream + static_cast<std::uint64_t>(c));
        futures.push_back(std::async(std::launch::async, [&, s] {
            MhOptions opts;
            opts.iters = iters;
            return mh_search(d, params, opts, s);
        }));
    }
    ChainState best = futures[0].get();
    for (size_t c = 1; c < futures.size(); ++c) {
        ChainState st = futures[c].get();
        if (st.best_log_post > best.best_log_post) best = std::move(st);
    }
    return best;
}

}  // namespace ggm
