#ifndef GGM_MH_HPP
#define GGM_MH_HPP

#include <functional>
#include <vector>

#include "ggm/hiw.hpp"
#include "ggm/rng.hpp"

namespace ggm {

struct ChainState {
    Graph current;
    double log_post = 0.0;
    Graph best_seen;
    double best_log_post = 0.0;
    std::uint64_t iteration = 0;
    std::uint64_t acceptance_count = 0;
};

struct MhOptions {
    std::uint64_t iters = 10000;
    // Invoked after every iteration with the (possibly unchanged) state.
    std::function<void(const Graph&)> on_state;
};

// Metropolis-Hastings over the decomposable graphs on d.p() vertices.
// Proposals are uniform over the legal single-edge moves of the current
// graph; the acceptance ratio carries the legal-neighborhood size correction.
// Starts at the empty graph. Every visited state is checked to be
// decomposable.
ChainState mh_search(const DataMatrix& d, const ModelParams& params, const MhOptions& opts, RngSeed seed);

// Independent chains on substreams stream, stream+1, ...; returns the state
// holding the best graph found across chains.
ChainState mh_search_chains(const DataMatrix& d, const ModelParams& params, std::uint64_t iters, int chains,
                            RngSeed seed);

}  // namespace ggm

#endif
