#ifndef COSMOTOPE_PRNG_HPP
#define COSMOTOPE_PRNG_HPP

#include <cstdint>

namespace cosmo {

// splitmix64; fixed across platforms so seeded runs are reproducible.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [1, bound]
    long long next_positive(long long bound) {
        return (long long)(next() % (uint64_t)bound) + 1;
    }
};

}  // namespace cosmo

#endif
