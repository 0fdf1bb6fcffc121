#include "harrisar1/samplers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace harrisar1 {

double RandomStream::exponential() { return -std::log(uniform_open()); }

double RandomStream::normal() {
    for (;;) {
        const double u = 2.0 * uniform01() - 1.0;
        const double v = 2.0 * uniform01() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
}

double RandomStream::gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw std::invalid_argument("RandomStream::gamma: shape and scale must be positive");
    if (shape < 1.0) {
        // Boosting identity: G(shape) = G(shape+1) * U^{1/shape}.
        return gamma(shape + 1.0, scale) * std::pow(uniform_open(), 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze.
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform_open();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
}

std::uint64_t RandomStream::poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw std::invalid_argument("RandomStream::poisson: mean must be finite and nonnegative");
    // Count exponential arrivals before `mean`; exact and immune to the
    // underflow that kills the product form for large means.  O(mean) time is
    // fine here: every caller mixes over a gamma variate with a small mean.
    std::uint64_t n = 0;
    double acc = exponential();
    while (acc <= mean) {
        ++n;
        acc += exponential();
    }
    return n;
}

std::uint64_t RandomStream::binomial(std::uint64_t n, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("RandomStream::binomial: p must lie in [0,1]");
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        if (uniform01() < p) ++hits;
    return hits;
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t path,
                          std::uint64_t component, std::uint64_t step, StreamTag tag) {
    std::uint64_t h = master;
    h = mix64(h + 0x9e3779b97f4a7c15ULL + path);
    h = mix64(h + 0x9e3779b97f4a7c15ULL + component);
    h = mix64(h + 0x9e3779b97f4a7c15ULL + step);
    h = mix64(h + 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(tag));
    return h;
}

double sample_sym_stable(RandomStream& rng, double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("sample_sym_stable: alpha must lie in (0,2]");
    const double phi = std::numbers::pi * (rng.uniform_open() - 0.5);
    const double w = rng.exponential();
    if (alpha == 1.0) return std::tan(phi);  // Cauchy, CF e^{-|t|}
    const double lead = std::sin(alpha * phi) / std::pow(std::cos(phi), 1.0 / alpha);
    return lead * std::pow(std::cos((1.0 - alpha) * phi) / w, (1.0 - alpha) / alpha);
}

double sample_pos_stable(RandomStream& rng, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("sample_pos_stable: alpha must lie in (0,1]");
    if (alpha == 1.0) return 1.0;  // LT e^{-s}
    const double u = std::numbers::pi * rng.uniform_open();
    const double w = rng.exponential();
    const double ratio = (1.0 - alpha) / alpha;
    return std::sin(alpha * u) * std::pow(std::sin((1.0 - alpha) * u), ratio) /
           (std::pow(std::sin(u), 1.0 / alpha) * std::pow(w, ratio));
}

namespace {

void check_mixture_params(const char* who, double alpha, double alpha_max,
                          double lambda, int k) {
    if (!(alpha > 0.0 && alpha <= alpha_max))
        throw std::invalid_argument(std::string(who) + ": alpha out of range");
    if (!(lambda > 0.0)) throw std::invalid_argument(std::string(who) + ": lambda must be positive");
    if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be a positive integer");
}

} // namespace

double sample_linnik(RandomStream& rng, double alpha, double lambda, int k) {
    check_mixture_params("sample_linnik", alpha, 2.0, lambda, k);
    const double g = rng.gamma(1.0 / k, lambda);
    return std::pow(g, 1.0 / alpha) * sample_sym_stable(rng, alpha);
}

double sample_ml_positive(RandomStream& rng, double alpha, double lambda, int k) {
    check_mixture_params("sample_ml_positive", alpha, 1.0, lambda, k);
    const double g = rng.gamma(1.0 / k, lambda);
    if (alpha == 1.0) return g;  // gamma(1/k, lambda)
    return std::pow(g, 1.0 / alpha) * sample_pos_stable(rng, alpha);
}

} // namespace harrisar1
