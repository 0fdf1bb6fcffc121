#include "harrisar1/process.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "harrisar1/io.hpp"

namespace harrisar1 {

namespace {

bool is_additive(Combiner c) { return c == Combiner::Add || c == Combiner::ThinnedAdd; }

std::uint64_t integer_state(double y, const char* who) {
    if (!(y >= 0.0) || y != std::floor(y))
        throw std::domain_error(std::string(who) + ": state must be a nonnegative integer");
    return static_cast<std::uint64_t>(y);
}

double combine_one(const SchemeSpec& spec, double y, bool innovate, RandomStream& rng,
                   RandomStream& thin_rng) {
    switch (spec.combiner) {
        case Combiner::Add:
            return spec.b * y + (innovate ? spec.innovation(rng) : 0.0);
        case Combiner::Max: {
            const double scaled = spec.b * y;
            return innovate ? std::max(scaled, spec.innovation(rng)) : scaled;
        }
        case Combiner::Min: {
            if (y < 0.0) throw std::domain_error("step: Min scheme needs nonnegative state");
            const double scaled = spec.b * y;
            return innovate ? std::min(scaled, spec.innovation(rng)) : scaled;
        }
        case Combiner::ThinnedAdd: {
            const std::uint64_t n = integer_state(y, "step: ThinnedAdd");
            const double thinned = static_cast<double>(thin(spec.b, n, thin_rng));
            return thinned + (innovate ? spec.innovation(rng) : 0.0);
        }
    }
    throw std::logic_error("combine_one: unknown combiner");
}

} // namespace

void SchemeSpec::validate() const {
    if (k < 1) throw std::invalid_argument("SchemeSpec: k must be a positive integer");
    if (!innovation) throw std::invalid_argument("SchemeSpec: innovation sampler is required");
    if (randomized) {
        if (!p.has_value() || !(*p > 0.0 && *p < 1.0))
            throw std::invalid_argument("SchemeSpec: randomized scheme needs p in (0,1)");
    } else if (p.has_value()) {
        throw std::invalid_argument("SchemeSpec: p is only meaningful when randomized");
    }
    switch (combiner) {
        case Combiner::Add:
        case Combiner::ThinnedAdd:
            if (!(b > 0.0 && b < 1.0))
                throw std::invalid_argument("SchemeSpec: Add/ThinnedAdd require 0 < b < 1");
            break;
        case Combiner::Max:
            if (!(b > 0.0)) throw std::invalid_argument("SchemeSpec: Max requires b > 0");
            break;
        case Combiner::Min:
            if (!(b > 1.0)) throw std::invalid_argument("SchemeSpec: Min requires b > 1");
            break;
    }
    if (init == InitMode::Custom && init_values.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("SchemeSpec: Custom init needs exactly k values");
}

std::uint64_t thin(double b, std::uint64_t x, RandomStream& rng) {
    if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("thin: b must lie in [0,1]");
    return rng.binomial(x, b);
}

std::vector<double> step(const SchemeSpec& spec, const std::vector<double>& state,
                         RandomStream& rng) {
    if (state.size() != static_cast<std::size_t>(spec.k))
        throw std::invalid_argument("step: state must have length k");
    bool shared_innovate = true;
    if (spec.randomized && spec.coin_mode == CoinMode::Shared)
        shared_innovate = !rng.bernoulli(*spec.p);
    std::vector<double> next(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        bool innovate = shared_innovate;
        if (spec.randomized && spec.coin_mode == CoinMode::PerComponent)
            innovate = !rng.bernoulli(*spec.p);
        next[i] = combine_one(spec, state[i], innovate, rng, rng);
    }
    return next;
}

std::vector<Trajectory> simulate(const SchemeSpec& spec, std::int64_t n_steps,
                                 std::int64_t n_paths, std::uint64_t seed) {
    spec.validate();
    if (n_steps < 1 || n_paths < 1)
        throw std::invalid_argument("simulate: n_steps and n_paths must be >= 1");

    const auto k = static_cast<std::size_t>(spec.k);
    std::vector<Trajectory> out(static_cast<std::size_t>(n_paths));
    for (std::int64_t r = 0; r < n_paths; ++r) {
        Trajectory& traj = out[static_cast<std::size_t>(r)];
        traj.seed = seed;
        traj.path = static_cast<std::uint64_t>(r);
        traj.components.assign(k, std::vector<double>());
        for (auto& series : traj.components)
            series.reserve(static_cast<std::size_t>(n_steps) + 1);

        std::vector<double> state(k);
        for (std::size_t i = 0; i < k; ++i) {
            if (spec.init == InitMode::Custom) {
                state[i] = spec.init_values[i];
            } else {
                RandomStream rs(derive_seed(seed, traj.path, i, 0, StreamTag::Init));
                state[i] = spec.innovation(rs);
            }
            traj.components[i].push_back(state[i]);
        }

        for (std::int64_t n = 1; n <= n_steps; ++n) {
            const auto sn = static_cast<std::uint64_t>(n);
            bool shared_innovate = true;
            if (spec.randomized && spec.coin_mode == CoinMode::Shared) {
                RandomStream cs(derive_seed(seed, traj.path, 0, sn, StreamTag::Coin));
                shared_innovate = !cs.bernoulli(*spec.p);
            }
            for (std::size_t i = 0; i < k; ++i) {
                bool innovate = shared_innovate;
                if (spec.randomized && spec.coin_mode == CoinMode::PerComponent) {
                    RandomStream cs(derive_seed(seed, traj.path, i, sn, StreamTag::Coin));
                    innovate = !cs.bernoulli(*spec.p);
                }
                RandomStream innov_rng(derive_seed(seed, traj.path, i, sn, StreamTag::Innovation));
                RandomStream thin_rng(derive_seed(seed, traj.path, i, sn, StreamTag::Thinning));
                state[i] = combine_one(spec, state[i], innovate, innov_rng, thin_rng);
                traj.components[i].push_back(state[i]);
            }
        }
        traj.aggregate = aggregate_series(traj.components, spec.combiner);
    }
    return out;
}

std::vector<double> aggregate_series(const std::vector<std::vector<double>>& components,
                                     Combiner combiner) {
    if (components.empty()) throw std::invalid_argument("aggregate_series: no components");
    const std::size_t len = components.front().size();
    for (const auto& series : components)
        if (series.size() != len)
            throw std::invalid_argument("aggregate_series: ragged component series");
    std::vector<double> agg(len);
    for (std::size_t n = 0; n < len; ++n) {
        double acc = components[0][n];
        for (std::size_t i = 1; i < components.size(); ++i) {
            const double y = components[i][n];
            if (is_additive(combiner)) acc += y;
            else if (combiner == Combiner::Max) acc = std::max(acc, y);
            else acc = std::min(acc, y);
        }
        agg[n] = acc;
    }
    return agg;
}

void write_trajectories_csv(std::ostream& out, const std::vector<Trajectory>& trajectories) {
    if (trajectories.empty()) throw std::invalid_argument("write_trajectories_csv: nothing to write");
    const std::size_t k = trajectories.front().components.size();
    out << "path,n";
    for (std::size_t i = 1; i <= k; ++i) out << ",component_" << i;
    out << ",aggregate\n";
    for (const auto& traj : trajectories) {
        const std::size_t len = traj.aggregate.size();
        for (std::size_t n = 0; n < len; ++n) {
            out << traj.path << ',' << n;
            for (std::size_t i = 0; i < k; ++i)
                out << ',' << format_g17(traj.components[i][n]);
            out << ',' << format_g17(traj.aggregate[n]) << '\n';
        }
    }
}

} // namespace harrisar1
