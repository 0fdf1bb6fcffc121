#pragma once

#include "harrisar1/rng.hpp"

namespace harrisar1 {

// Standard symmetric alpha-stable draw, CF exp(-|t|^alpha), alpha in (0,2].
double sample_sym_stable(RandomStream& rng, double alpha);

// Standard positive alpha-stable draw, LT exp(-s^alpha), alpha in (0,1];
// alpha = 1 is the unit point mass.
double sample_pos_stable(RandomStream& rng, double alpha);

// Gamma-stable mixture with CF {1 + lambda|t|^alpha}^{-1/k}.
double sample_linnik(RandomStream& rng, double alpha, double lambda, int k);

// Gamma-stable mixture with LT {1 + lambda s^alpha}^{-1/k}; always positive.
// alpha = 1 collapses to gamma(1/k, lambda).
double sample_ml_positive(RandomStream& rng, double alpha, double lambda, int k);

} // namespace harrisar1
