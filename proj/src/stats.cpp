#include "harrisar1/stats.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace harrisar1 {

double kolmogorov_sf(double x) {
    if (x <= 0.0) return 1.0;
    if (x < 0.25) {
        // Dual theta series; the alternating form needs too many terms here.
        double cdf = 0.0;
        for (int j = 1; j <= 20; j += 2) {
            const double term = std::exp(-static_cast<double>(j) * j *
                                         std::numbers::pi * std::numbers::pi / (8.0 * x * x));
            cdf += term;
            if (term < 1e-18 * cdf) break;
        }
        cdf *= std::sqrt(2.0 * std::numbers::pi) / x;
        return std::clamp(1.0 - cdf, 0.0, 1.0);
    }
    double tail = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 200; ++j) {
        const double term = std::exp(-2.0 * static_cast<double>(j) * j * x * x);
        tail += 2.0 * sign * term;
        if (term < 1e-18) break;
        sign = -sign;
    }
    return std::clamp(tail, 0.0, 1.0);
}

namespace {

double kolmogorov_critical(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("ks_critical: alpha must lie in (0,1)");
    double lo = 1e-3, hi = 4.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (kolmogorov_sf(mid) > alpha) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

void require_sorted(std::span<const double> xs, const char* who) {
    if (!std::is_sorted(xs.begin(), xs.end()))
        throw std::invalid_argument(std::string(who) + ": sample must be sorted ascending");
}

} // namespace

double ks_critical(double alpha, std::size_t n) {
    return kolmogorov_critical(alpha) / std::sqrt(static_cast<double>(n));
}

double ks_critical_two(double alpha, std::size_t n, std::size_t m) {
    const double nn = static_cast<double>(n), mm = static_cast<double>(m);
    return kolmogorov_critical(alpha) * std::sqrt((nn + mm) / (nn * mm));
}

KsResult ks_test(std::span<const double> sorted_sample,
                 const std::function<double(double)>& df) {
    if (sorted_sample.size() < 10)
        throw std::invalid_argument("ks_test: need at least 10 observations");
    require_sorted(sorted_sample, "ks_test");
    const double n = static_cast<double>(sorted_sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
        const double f = df(sorted_sample[i]);
        const double upper = static_cast<double>(i + 1) / n - f;
        const double lower = f - static_cast<double>(i) / n;
        d = std::max({d, upper, lower});
    }
    return {d, kolmogorov_sf(std::sqrt(n) * d)};
}

KsResult ks_two_sample(std::span<const double> sorted_a, std::span<const double> sorted_b) {
    if (sorted_a.size() < 10 || sorted_b.size() < 10)
        throw std::invalid_argument("ks_two_sample: need at least 10 observations each");
    require_sorted(sorted_a, "ks_two_sample");
    require_sorted(sorted_b, "ks_two_sample");
    const double na = static_cast<double>(sorted_a.size());
    const double nb = static_cast<double>(sorted_b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < sorted_a.size() && j < sorted_b.size()) {
        const double x = std::min(sorted_a[i], sorted_b[j]);
        while (i < sorted_a.size() && sorted_a[i] <= x) ++i;
        while (j < sorted_b.size() && sorted_b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    const double ne = na * nb / (na + nb);
    return {d, kolmogorov_sf(std::sqrt(ne) * d)};
}

double empirical_cf_distance(std::span<const double> sample,
                             const std::function<double(double)>& cf,
                             std::span<const double> t_grid) {
    if (sample.empty()) throw std::invalid_argument("empirical_cf_distance: empty sample");
    const double n = static_cast<double>(sample.size());
    double worst = 0.0;
    for (double t : t_grid) {
        double re = 0.0, im = 0.0;
        for (double x : sample) {
            re += std::cos(t * x);
            im += std::sin(t * x);
        }
        worst = std::max(worst, std::abs(std::complex<double>{re / n - cf(t), im / n}));
    }
    return worst;
}

double empirical_lt_distance(std::span<const double> sample,
                             const std::function<double(double)>& lt,
                             std::span<const double> s_grid) {
    if (sample.empty()) throw std::invalid_argument("empirical_lt_distance: empty sample");
    const double n = static_cast<double>(sample.size());
    double worst = 0.0;
    for (double s : s_grid) {
        double acc = 0.0;
        for (double x : sample) acc += std::exp(-s * x);
        worst = std::max(worst, std::abs(acc / n - lt(s)));
    }
    return worst;
}

} // namespace harrisar1
