#pragma once

#include <cstdint>
#include <stdexcept>

namespace harrisar1 {

/// Counter-free random stream built on the splitmix64 generator.
///
/// All samplers in this library draw from a RandomStream owned by the
/// caller; nothing in the library keeps hidden generator state.  The
/// generator is fixed (not std::mt19937) so that a given seed produces the
/// same draws on every platform and in every build.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on the open interval (0, 1); safe to feed into log() and
    /// quantile transforms.
    double uniform_open() {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    double exponential();                       // mean 1
    double normal();                            // standard normal (polar method)
    double gamma(double shape, double scale = 1.0);
    std::uint64_t poisson(double mean);
    std::uint64_t binomial(std::uint64_t n, double p);

private:
    std::uint64_t state_;
};

/// Deterministic substream derivation.  Every random decision in a
/// simulation is drawn from a stream seeded by
///   derive_seed(master, path, component, step, tag)
/// so results do not depend on the order in which paths (or steps within
/// unrelated paths) are generated.  The mix is a chain of splitmix64
/// finalizers, one per field.
enum class StreamTag : std::uint64_t { Init = 1, Coin = 2, Innovation = 3, Thinning = 4, Draw = 5 };

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t path,
                          std::uint64_t component, std::uint64_t step, StreamTag tag);

} // namespace harrisar1
