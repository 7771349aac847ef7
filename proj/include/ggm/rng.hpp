#ifndef GGM_RNG_HPP
#define GGM_RNG_HPP

#include <cstdint>

namespace ggm {

// (seed, stream) pair identifying an independent substream. Replicate r of a
// simulation uses stream r, so results do not depend on scheduling order.
struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    RngSeed with_stream(std::uint64_t s) const { return {seed, s}; }
};

// Deterministic generator: sfc64 keyed through splitmix64 so that nearby
// (seed, stream) pairs decorrelate. The <random> distributions are not
// portable across standard libraries, so uniform and normal draws are
// produced here directly.
class Rng {
  public:
    explicit Rng(RngSeed s);

    std::uint64_t next_u64();

    // uniform on (0,1)
    double uniform();

    // standard normal via Box-Muller (caches the spare draw)
    double normal();

    // uniform integer in [0, n)
    std::uint64_t uniform_int(std::uint64_t n);

  private:
    std::uint64_t a_, b_, c_, counter_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace ggm

#endif
