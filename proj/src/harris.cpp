#include "harrisar1/harris.hpp"

#include <cmath>
#include <stdexcept>

namespace harrisar1 {

HarrisLaw::HarrisLaw(double a_, int k_) : a(a_), k(k_) {
    if (!(a > 1.0) || !std::isfinite(a))
        throw std::invalid_argument("HarrisLaw: a must exceed 1");
    if (k < 1) throw std::invalid_argument("HarrisLaw: k must be a positive integer");
}

double harris_compose(double z, double a, double k) {
    return z / std::pow(a - (a - 1.0) * std::pow(z, k), 1.0 / k);
}

std::complex<double> harris_compose(std::complex<double> z, double a, double k) {
    // Re(a - (a-1) z^k) >= 1 for |z| <= 1, so the principal branch is smooth.
    return z / std::pow(a - (a - 1.0) * std::pow(z, k), 1.0 / k);
}

double HarrisLaw::pgf(double s) const {
    if (!(s >= 0.0 && s <= 1.0))
        throw std::domain_error("HarrisLaw::pgf: s must lie in [0,1]");
    return harris_compose(s, a, static_cast<double>(k));
}

std::complex<double> HarrisLaw::pgf(std::complex<double> s) const {
    return harris_compose(s, a, static_cast<double>(k));
}

LatticePmf HarrisLaw::pmf(std::int64_t n_max) const {
    if (n_max < 1) throw std::invalid_argument("HarrisLaw::pmf: n_max must be >= 1");
    LatticePmf out;
    out.offset = 1;
    out.stride = k;
    const double r = 1.0 / k;
    const double q = 1.0 - 1.0 / a;
    double coeff = std::pow(a, -r);               // m = 0 term
    for (std::int64_t m = 0; 1 + k * m <= n_max; ++m) {
        if (m > 0) coeff *= (r + m - 1.0) / static_cast<double>(m) * q;
        out.weights.push_back(coeff);
    }
    out.truncation_mass = std::max(0.0, 1.0 - out.table_mass());
    return out;
}

std::uint64_t HarrisLaw::sample(RandomStream& rng) const {
    // NB(1/k, 1/a) as Poisson mixed over gamma(shape 1/k, scale a-1).
    const double g = rng.gamma(1.0 / k, a - 1.0);
    const std::uint64_t m = rng.poisson(g);
    return 1 + static_cast<std::uint64_t>(k) * m;
}

} // namespace harrisar1
