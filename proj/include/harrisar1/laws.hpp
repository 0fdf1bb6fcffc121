#pragma once

#include <complex>

#include "harrisar1/exponent.hpp"
#include "harrisar1/pgf_extract.hpp"
#include "harrisar1/rng.hpp"

namespace harrisar1 {

// log(1 + e^w) staying finite for |Re w| large; every transform below is
// exp(-log_one_plus_exp(log psi)/k) in disguise.
std::complex<double> log_one_plus_exp(std::complex<double> w);

// Symmetric law with CF {1 + psi(|t|)}^{-1/k}; the CF is real by symmetry.
// Increasing exponent, alpha in (0,2].
struct GenSemiAlphaLaplaceLaw {
    SemiStableExponent exponent;
    int k;

    GenSemiAlphaLaplaceLaw(SemiStableExponent e, int k_);
    double cf(double t) const;
};

// Positive law with LT {1 + psi(s)}^{-1/k}; Increasing exponent, alpha in (0,1].
struct GenSemiMLLaw {
    SemiStableExponent exponent;
    int k;

    GenSemiMLLaw(SemiStableExponent e, int k_);
    double lt(double s) const;
};

// Lattice law on {0, m, 2m, ...} with p.g.f. {1 + psi(1 - s^m)}^{-1/k};
// Increasing exponent, alpha in (0,1].
struct DiscreteGenSemiMLLaw {
    SemiStableExponent exponent;
    int k;
    int m;

    DiscreteGenSemiMLLaw(SemiStableExponent e, int k_, int m_ = 1);
    double pgf(double s) const;
    // Unit-circle evaluation for coefficient extraction.  Computed in log
    // space: for beta != 0 the log-periodic factor reaches e^{+-huge} near
    // z = 1 and the direct form overflows.
    std::complex<double> pgf(std::complex<double> z) const;
    // pgf through the deficit w = 1 - s^m.  Scaling the law acts as w -> b*w,
    // so callers that need the scaled factor avoid an m-th root of s'.
    std::complex<double> pgf_at_deficit(std::complex<double> w) const;
    PgfExtractResult pmf(std::size_t n_points = std::size_t{1} << 14) const;
};

// Positive law with s.f. {1 + psi(x)}^{-1/k}; Increasing exponent, any alpha > 0.
// Satisfies p*psi(x) = psi(p^{1/alpha} x) with p = 1/a.
struct GenSemiParetoLaw {
    SemiStableExponent exponent;
    int k;

    GenSemiParetoLaw(SemiStableExponent e, int k_);
    double sf(double x) const;
    double df(double x) const { return 1.0 - sf(x); }
    double sample(RandomStream& rng) const;  // exact inversion
};

// Positive law with d.f. {1 + psi(x)}^{-1/k}; Decreasing (Frechet-type)
// exponent.  k = 1 is the exponential max-semi-stable law.
struct GammaMaxSemiStableLaw {
    SemiStableExponent exponent;
    int k;

    GammaMaxSemiStableLaw(SemiStableExponent e, int k_);
    double df(double x) const;
    double sample(RandomStream& rng) const;  // exact inversion
};

// d.f. exp{-psi(x)} on x > 0 (Frechet branch); Decreasing exponent.
struct MaxSemiStableLaw {
    SemiStableExponent exponent;

    explicit MaxSemiStableLaw(SemiStableExponent e);
    double df(double x) const;
    double sample(RandomStream& rng) const;  // exact inversion
};

} // namespace harrisar1
