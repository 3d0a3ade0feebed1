#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace layers::rng {

// Deterministic random stream. The draw algorithms are written out here
// instead of using <random> distributions because the standard leaves those
// implementation-defined, and saved artifacts must be reproducible across
// toolchains.
class Stream {
  public:
    Stream() : engine_(0) {}
    Stream(std::uint64_t seed, std::uint64_t domain, std::uint64_t index) {
        std::seed_seq seq{seed, domain, index};
        engine_ = std::mt19937_64(seq);
    }

    std::uint64_t bits() { return engine_(); }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // unbiased integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v;
        do {
            v = bits();
        } while (v >= limit);
        return v % n;
    }

    bool coin() { return (bits() & 1) != 0; }

    // Box-Muller, one value per call (the pair's second half is discarded to
    // keep draw counts easy to reason about)
    double normal(double mean, double sd) {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        return mean + sd * z;
    }

    // Fisher-Yates
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

// Stream domains, so unrelated draws never share a sequence.
inline constexpr std::uint64_t kDomainInit = 1;    // per-layer weight init
inline constexpr std::uint64_t kDomainShuffle = 2; // per-network epoch order
inline constexpr std::uint64_t kDomainAugment = 3; // per-network masks/noise

} // namespace layers::rng
