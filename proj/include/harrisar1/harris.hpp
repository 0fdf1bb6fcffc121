#pragma once

#include <complex>
#include <cstdint>

#include "harrisar1/lattice_pmf.hpp"
#include "harrisar1/rng.hpp"

namespace harrisar1 {

/// Harris(1, a, k) law on {1, 1+k, 1+2k, ...} with p.g.f.
/// P(s) = s / {a - (a-1) s^k}^{1/k}.  Reduces to geometric(1/a) on
/// {1, 2, ...} when k = 1.
struct HarrisLaw {
    double a;
    int k;

    HarrisLaw(double a_, int k_);

    double pgf(double s) const;                                 // s in [0, 1]
    std::complex<double> pgf(std::complex<double> s) const;     // |s| <= 1

    /// pmf up to n_max by the negative-binomial series
    ///   P(X = 1 + k*m) = C(1/k + m - 1, m) a^{-1/k} (1 - 1/a)^m.
    LatticePmf pmf(std::int64_t n_max) const;

    /// 1 + k*M with M negative binomial (shape 1/k, success prob 1/a),
    /// drawn as a gamma-Poisson mixture.
    std::uint64_t sample(RandomStream& rng) const;

    double mean() const { return a; }
};

/// The Harris composition z -> z / {a - (a-1) z^k}^{1/k}, the p.g.f. of a
/// Harris random sum/extreme of i.i.d. terms with transform value z.  k is
/// real so perturbation (negative-control) checks can nudge it.
double harris_compose(double z, double a, double k);
std::complex<double> harris_compose(std::complex<double> z, double a, double k);

} // namespace harrisar1
