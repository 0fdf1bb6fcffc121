#include "harrisar1/pgf_extract.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace harrisar1 {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

void fft_radix2(std::vector<std::complex<double>>& data, bool inverse) {
    const std::size_t n = data.size();
    if (!is_power_of_two(n)) throw std::invalid_argument("fft_radix2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto u = data[i + j];
                const auto v = data[i + j + len / 2] * w;
                data[i + j] = u + v;
                data[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        for (auto& x : data) x /= static_cast<double>(n);
    }
}

PgfExtractResult pmf_from_pgf(const std::function<std::complex<double>(std::complex<double>)>& pgf,
                              const PgfExtractOptions& opts) {
    if (!is_power_of_two(opts.n_points))
        throw std::invalid_argument("pmf_from_pgf: n_points must be a power of two");
    if (opts.stride < 1) throw std::invalid_argument("pmf_from_pgf: stride must be >= 1");
    const std::size_t n = opts.n_points;
    const double m = static_cast<double>(opts.stride);
    const double o = static_cast<double>(opts.offset);

    // Sample the reduced pgf Q(u) = s^{-offset} P(s) at u = s^stride running over
    // the n-th roots of unity. Tail mass beyond n aliases onto the lattice instead
    // of leaking into foreign residue classes.
    std::vector<std::complex<double>> data(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / (m * static_cast<double>(n));
        data[j] = pgf(std::polar(1.0, theta)) * std::polar(1.0, -theta * o);
    }
    fft_radix2(data, false);

    PgfExtractResult res;
    res.pmf.offset = opts.offset;
    res.pmf.stride = opts.stride;
    res.pmf.weights.resize(n);
    res.min_coefficient = 0.0;
    res.coefficient_sum = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        double c = data[t].real() / static_cast<double>(n);
        res.min_coefficient = std::min(res.min_coefficient, c);
        res.coefficient_sum += c;
        if (c < opts.fail_floor) res.valid = false;
        if (c < opts.zero_cutoff) c = 0.0;  // covers roundoff negatives as well
        res.pmf.weights[t] = c;
    }
    if (opts.max_value >= opts.offset) {
        const auto keep = static_cast<std::size_t>((opts.max_value - opts.offset) / opts.stride) + 1;
        if (keep < res.pmf.weights.size()) res.pmf.weights.resize(keep);
    }
    while (!res.pmf.weights.empty() && res.pmf.weights.back() == 0.0) res.pmf.weights.pop_back();
    const double mass = res.pmf.table_mass();
    if (mass > 1.0) {
        // Clamping negatives can push the total just past 1; rescale the noise away.
        for (auto& w : res.pmf.weights) w /= mass;
    }
    res.pmf.truncation_mass = std::max(0.0, 1.0 - res.pmf.table_mass());
    return res;
}

double off_lattice_mass(const std::function<std::complex<double>(std::complex<double>)>& pgf,
                        std::int64_t stride, std::int64_t offset) {
    if (stride < 1) throw std::invalid_argument("off_lattice_mass: stride must be >= 1");
    // Mass on the residue class offset (mod stride) is an exact average over
    // stride-th roots of unity; no truncation enters.
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t l = 0; l < stride; ++l) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(stride);
        acc += pgf(std::polar(1.0, theta)) * std::polar(1.0, -theta * static_cast<double>(offset));
    }
    const double on_class = acc.real() / static_cast<double>(stride);
    return std::max(0.0, 1.0 - on_class);
}

} // namespace harrisar1
