#include "ggm/rng.hpp"

#include <cmath>

namespace ggm {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(RngSeed s) {
    std::uint64_t key = s.seed;
    (void)splitmix64(key);
    key ^= 0x6a09e667f3bcc909ull + s.stream * 0x3c6ef372fe94f82bull;
    a_ = splitmix64(key);
    b_ = splitmix64(key);
    c_ = splitmix64(key);
    counter_ = 1;
    for (int i = 0; i < 12; ++i) (void)next_u64();
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t tmp = a_ + b_ + counter_++;
    a_ = b_ ^ (b_ >> 11);
    b_ = c_ + (c_ << 3);
    c_ = rotl(c_, 24) + tmp;
    return tmp;
}

double Rng::uniform() {
    // 53 random bits; +0.5 ulp offset keeps the value strictly inside (0,1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::uint64_t Rng::uniform_int(std::uint64_t n) {
    // rejection sampling on the top bits, unbiased
    const std::uint64_t limit = ~0ull - (~0ull % n);
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

}  // namespace ggm
