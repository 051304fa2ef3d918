#ifndef LENSLAB_RNG_HPP
#define LENSLAB_RNG_HPP

#include <cstdint>

namespace lenslab {

// splitmix64; used both as a generator and to derive independent
// per-task streams from one master seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1); 53 significant bits, identical on every platform
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

inline std::uint64_t split_stream(std::uint64_t master, std::uint64_t task) {
    SplitMix64 g(master ^ (0x9e3779b97f4a7c15ULL * (task + 1)));
    return g.next();
}

} // namespace lenslab

#endif
