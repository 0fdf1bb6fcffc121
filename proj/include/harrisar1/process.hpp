#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "harrisar1/rng.hpp"

namespace harrisar1 {

enum class Combiner { Add, Max, Min, ThinnedAdd };
enum class CoinMode { Shared, PerComponent };
enum class InitMode { InnovationDraw, Custom };

// One AR(1) recursion joining the scaled previous state with a fresh
// innovation: Add/Max/Min use b*Y, ThinnedAdd uses binomial thinning of Y.
// With randomized=true the innovation part is skipped with probability p;
// the b part is always applied.
struct SchemeSpec {
    Combiner combiner = Combiner::Add;
    bool randomized = false;
    std::optional<double> p;
    double b = 0.5;
    int k = 1;
    std::function<double(RandomStream&)> innovation;
    CoinMode coin_mode = CoinMode::Shared;
    InitMode init = InitMode::InnovationDraw;
    std::vector<double> init_values; // used when init == Custom; size k

    void validate() const; // throws std::invalid_argument on bad ranges
};

struct Trajectory {
    std::vector<std::vector<double>> components; // k series of length n_steps+1
    std::vector<double> aggregate;               // combiner-fold at every n
    std::uint64_t seed = 0;                      // master seed of the run
    std::uint64_t path = 0;
};

// Binomial thinning: sum of x Bernoulli(b) indicators.
std::uint64_t thin(double b, std::uint64_t x, RandomStream& rng);

// Advance a k-vector one step, drawing sequentially from rng.
std::vector<double> step(const SchemeSpec& spec, const std::vector<double>& state,
                         RandomStream& rng);

// Deterministic simulation: every random decision draws from a substream
// seeded by derive_seed(seed, path, component, step, tag), so the result does
// not depend on path execution order.
std::vector<Trajectory> simulate(const SchemeSpec& spec, std::int64_t n_steps,
                                 std::int64_t n_paths, std::uint64_t seed);

// Pointwise exact combiner-fold of the component series.
std::vector<double> aggregate_series(const std::vector<std::vector<double>>& components,
                                     Combiner combiner);

// Columns: path, n, component_1..component_k, aggregate; 17 significant digits.
void write_trajectories_csv(std::ostream& out, const std::vector<Trajectory>& trajectories);

} // namespace harrisar1
