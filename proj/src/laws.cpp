#include "harrisar1/laws.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace harrisar1 {

namespace {

void require_k(int k, const char* who) {
    if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be a positive integer");
}

void require_tail(const SemiStableExponent& e, Tail want, const char* who) {
    if (e.tail() != want)
        throw std::invalid_argument(std::string(who) + ": exponent has the wrong tail direction");
}

void require_alpha_at_most(const SemiStableExponent& e, double cap, const char* who) {
    if (e.alpha() > cap)
        throw std::invalid_argument(std::string(who) + ": alpha exceeds the family's range");
}

double one_plus_psi_pow(double psi, int k) {
    return std::pow(1.0 + psi, -1.0 / k);
}

} // namespace

std::complex<double> log_one_plus_exp(std::complex<double> w) {
    if (w.real() > 40.0) return w + std::exp(-w);
    if (w.real() < -40.0) return std::exp(w);
    return std::log(1.0 + std::exp(w));
}

GenSemiAlphaLaplaceLaw::GenSemiAlphaLaplaceLaw(SemiStableExponent e, int k_)
    : exponent(e), k(k_) {
    require_k(k, "GenSemiAlphaLaplaceLaw");
    require_tail(exponent, Tail::Increasing, "GenSemiAlphaLaplaceLaw");
    require_alpha_at_most(exponent, 2.0, "GenSemiAlphaLaplaceLaw");
}

double GenSemiAlphaLaplaceLaw::cf(double t) const {
    if (t == 0.0) return 1.0;
    return one_plus_psi_pow(exponent(std::abs(t)), k);
}

GenSemiMLLaw::GenSemiMLLaw(SemiStableExponent e, int k_) : exponent(e), k(k_) {
    require_k(k, "GenSemiMLLaw");
    require_tail(exponent, Tail::Increasing, "GenSemiMLLaw");
    require_alpha_at_most(exponent, 1.0, "GenSemiMLLaw");
}

double GenSemiMLLaw::lt(double s) const {
    if (s < 0.0) throw std::domain_error("GenSemiMLLaw::lt: s must be nonnegative");
    if (s == 0.0) return 1.0;
    return one_plus_psi_pow(exponent(s), k);
}

DiscreteGenSemiMLLaw::DiscreteGenSemiMLLaw(SemiStableExponent e, int k_, int m_)
    : exponent(e), k(k_), m(m_) {
    require_k(k, "DiscreteGenSemiMLLaw");
    require_tail(exponent, Tail::Increasing, "DiscreteGenSemiMLLaw");
    require_alpha_at_most(exponent, 1.0, "DiscreteGenSemiMLLaw");
    if (m < 1) throw std::invalid_argument("DiscreteGenSemiMLLaw: gap m must be a positive integer");
}

double DiscreteGenSemiMLLaw::pgf(double s) const {
    if (!(s >= 0.0 && s <= 1.0))
        throw std::domain_error("DiscreteGenSemiMLLaw::pgf: s must lie in [0,1]");
    const double w = 1.0 - std::pow(s, m);
    if (w <= 0.0) return 1.0;
    return one_plus_psi_pow(exponent(w), k);
}

std::complex<double> DiscreteGenSemiMLLaw::pgf(std::complex<double> z) const {
    return pgf_at_deficit(1.0 - std::pow(z, m));
}

std::complex<double> DiscreteGenSemiMLLaw::pgf_at_deficit(std::complex<double> w) const {
    if (w == std::complex<double>{0.0, 0.0}) return {1.0, 0.0};
    return std::exp(-log_one_plus_exp(exponent.log_eval(w)) / static_cast<double>(k));
}

PgfExtractResult DiscreteGenSemiMLLaw::pmf(std::size_t n_points) const {
    PgfExtractOptions opts;
    opts.n_points = n_points;
    opts.stride = m;
    opts.offset = 0;
    return pmf_from_pgf([this](std::complex<double> z) { return pgf(z); }, opts);
}

GenSemiParetoLaw::GenSemiParetoLaw(SemiStableExponent e, int k_) : exponent(e), k(k_) {
    require_k(k, "GenSemiParetoLaw");
    require_tail(exponent, Tail::Increasing, "GenSemiParetoLaw");
}

double GenSemiParetoLaw::sf(double x) const {
    if (x < 0.0) throw std::domain_error("GenSemiParetoLaw::sf: x must be nonnegative");
    if (x == 0.0) return 1.0;
    return one_plus_psi_pow(exponent(x), k);
}

double GenSemiParetoLaw::sample(RandomStream& rng) const {
    const double u = rng.uniform_open();
    const double y = std::max(std::pow(u, -static_cast<double>(k)) - 1.0, 1e-300);
    return exponent.invert(y);
}

GammaMaxSemiStableLaw::GammaMaxSemiStableLaw(SemiStableExponent e, int k_)
    : exponent(e), k(k_) {
    require_k(k, "GammaMaxSemiStableLaw");
    require_tail(exponent, Tail::Decreasing, "GammaMaxSemiStableLaw");
}

double GammaMaxSemiStableLaw::df(double x) const {
    if (x < 0.0) throw std::domain_error("GammaMaxSemiStableLaw::df: x must be nonnegative");
    if (x == 0.0) return 0.0;
    return one_plus_psi_pow(exponent(x), k);
}

double GammaMaxSemiStableLaw::sample(RandomStream& rng) const {
    const double u = rng.uniform_open();
    const double y = std::max(std::pow(u, -static_cast<double>(k)) - 1.0, 1e-300);
    return exponent.invert(y);
}

MaxSemiStableLaw::MaxSemiStableLaw(SemiStableExponent e) : exponent(e) {
    require_tail(exponent, Tail::Decreasing, "MaxSemiStableLaw");
}

double MaxSemiStableLaw::df(double x) const {
    if (x < 0.0) throw std::domain_error("MaxSemiStableLaw::df: x must be nonnegative");
    if (x == 0.0) return 0.0;
    return std::exp(-exponent(x));
}

double MaxSemiStableLaw::sample(RandomStream& rng) const {
    const double u = rng.uniform_open();
    return exponent.invert(-std::log(u));
}

} // namespace harrisar1
