#ifndef UOWSN_RANDOM_HPP
#define UOWSN_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace uowsn {

/// Identifies the generator and the seed derivation; bump when either changes,
/// since every stored campaign result depends on them.
inline constexpr std::string_view kRngVersion = "mt19937_64+splitmix64/v1";

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Per-realization seed. Independent of node count, so a sweep over N reuses
/// the same relay draws for the first relays of every realization.
inline constexpr std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                                 std::uint64_t realization_index) {
    return splitmix64(splitmix64(master_seed) ^ (realization_index * 0xd1b54a32d192ed03ULL));
}

/// Deterministic uniform source. std::mt19937_64's output sequence is fixed by
/// the standard; the real-valued mapping is done here rather than through
/// std::uniform_real_distribution, whose algorithm is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace uowsn

#endif  // UOWSN_RANDOM_HPP
