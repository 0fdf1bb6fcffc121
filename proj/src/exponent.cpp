#include "harrisar1/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace harrisar1 {

namespace {
constexpr double kMonotonicitySlack = 1e-9;
constexpr double kResidualFloor = 1e-300;
} // namespace

double SemiStableExponent::beta_bound(double alpha, double b) {
    return alpha * std::abs(std::log(b)) / (2.0 * std::numbers::pi);
}

SemiStableExponent::SemiStableExponent(double lambda, double alpha, double beta,
                                       double b, Tail tail)
    : lambda_(lambda), alpha_(alpha), beta_(beta), b_(b), tail_(tail) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("SemiStableExponent: lambda must be positive");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("SemiStableExponent: alpha must be positive");
    if (!(b > 0.0 && b < 1.0))
        throw std::invalid_argument("SemiStableExponent: b must lie in (0,1)");
    const double bound = beta_bound(alpha, b);
    if (beta != 0.0 && !(std::abs(beta) <= bound - kMonotonicitySlack)) {
        std::ostringstream msg;
        msg << "SemiStableExponent: |beta| = " << std::abs(beta)
            << " violates the strict-monotonicity bound alpha*|ln b|/(2*pi) = " << bound;
        throw std::invalid_argument(msg.str());
    }
    log_period_ = std::abs(std::log(b_));
    a_ = std::pow(b_, -alpha_);
}

double SemiStableExponent::natural_scale() const {
    // x with psi(x) = 1 when beta = 0; the log-periodic factor only nudges it.
    double sign = (tail_ == Tail::Increasing) ? -1.0 : 1.0;
    return std::pow(lambda_, sign / alpha_);
}

double SemiStableExponent::operator()(double x) const {
    if (!(x > 0.0))
        throw std::domain_error("SemiStableExponent: argument must be positive");
    const double u = std::log(x);
    const double power = tail_ == Tail::Increasing ? alpha_ * u : -alpha_ * u;
    double log_h = 0.0;
    if (beta_ != 0.0)
        log_h = beta_ * std::sin(2.0 * std::numbers::pi * u / log_period_);
    return lambda_ * std::exp(power + log_h);
}

std::complex<double> SemiStableExponent::log_eval(std::complex<double> z) const {
    const std::complex<double> u = std::log(z);
    std::complex<double> out = std::log(lambda_) +
        (tail_ == Tail::Increasing ? alpha_ : -alpha_) * u;
    if (beta_ != 0.0)
        out += beta_ * std::sin(2.0 * std::numbers::pi * u / log_period_);
    return out;
}

double SemiStableExponent::invert(double y) const {
    if (!(y > 0.0) || !std::isfinite(y))
        throw std::range_error("SemiStableExponent::invert: target outside the range of psi");
    // h is bounded in [e^{-|beta|}, e^{|beta|}], so the pure power law gives
    // an exact bracket.
    const double sgn = tail_ == Tail::Increasing ? 1.0 : -1.0;
    const double band = std::abs(beta_);
    double lo = std::pow(y / lambda_ * std::exp(-band), sgn / alpha_);
    double hi = std::pow(y / lambda_ * std::exp(band), sgn / alpha_);
    if (lo > hi) std::swap(lo, hi);
    if (beta_ == 0.0) return lo;

    // Bisection in log space; the bracket spans at most e^{2|beta|/alpha},
    // so ~60 halvings push the relative width below 1e-16.
    double llo = std::log(lo), lhi = std::log(hi);
    const double ly = std::log(y);
    auto log_psi = [&](double lx) {
        return std::log(lambda_) + sgn * alpha_ * lx +
               beta_ * std::sin(2.0 * std::numbers::pi * lx / log_period_);
    };
    const bool rising = tail_ == Tail::Increasing;
    for (int it = 0; it < 80 && lhi - llo > 1e-15; ++it) {
        const double mid = 0.5 * (llo + lhi);
        const bool below = log_psi(mid) < ly;
        if (below == rising) llo = mid; else lhi = mid;
    }
    return std::exp(0.5 * (llo + lhi));
}

double scaling_residual(const SemiStableExponent& psi, std::span<const double> grid) {
    return scaling_residual(psi, grid, psi.a(), psi.scale_ratio());
}

double scaling_residual(const SemiStableExponent& psi, std::span<const double> grid,
                        double a, double arg_ratio) {
    double worst = 0.0;
    for (double x : grid) {
        const double lhs = psi(x);
        const double rhs = a * psi(arg_ratio * x);
        const double rel = std::abs(lhs - rhs) / std::max(lhs, kResidualFloor);
        worst = std::max(worst, rel);
    }
    return worst;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
        throw std::invalid_argument("log_spaced: need 0 < lo < hi and n >= 2");
    std::vector<double> out(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                 static_cast<double>(n - 1));
    return out;
}

std::vector<double> standard_grid(double scale, int decades, int per_decade) {
    const double half = 0.5 * decades;
    return log_spaced(scale * std::pow(10.0, -half), scale * std::pow(10.0, half),
                      static_cast<std::size_t>(decades * per_decade) + 1);
}

} // namespace harrisar1
