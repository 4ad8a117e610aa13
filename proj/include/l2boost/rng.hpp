#ifndef L2BOOST_RNG_HPP
#define L2BOOST_RNG_HPP

#include <cstdint>
#include <random>

namespace l2boost {

// Seeded generator used everywhere randomness appears. std::mt19937_64 is
// fully specified by the standard; the normal sampler is spelled out here
// because std::normal_distribution is implementation-defined. Report headers
// record kRngAlgorithm so runs can be tied to the exact sampling scheme.
inline constexpr const char* kRngAlgorithm = "mt19937_64/boxmuller53-v1";

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller on the uniform above.
    double normal();

    // Uniform on {0, ..., n-1} by rejection, bias-free.
    int below(int n);

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// splitmix64 step, used to derive independent sub-seeds (data stream,
// fold shuffles, coefficient draws) from one replication seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

} // namespace l2boost

#endif
