#pragma once

#include <functional>
#include <span>

namespace harrisar1 {

struct KsResult {
    double d = 0.0;       // sup |F_n - F|
    double p_value = 0.0; // asymptotic Kolmogorov tail
};

// Kolmogorov distribution tail Q(x) = P(sup |B(t)| > x).
double kolmogorov_sf(double x);

// Critical value of D at level alpha: c(alpha)/sqrt(n) with Q(c) = alpha.
double ks_critical(double alpha, std::size_t n);
// Two-sample analogue: c(alpha) * sqrt((n+m)/(n*m)).
double ks_critical_two(double alpha, std::size_t n, std::size_t m);

// One-sample KS against a continuous d.f.; sample must be sorted ascending.
KsResult ks_test(std::span<const double> sorted_sample,
                 const std::function<double(double)>& df);

// Two-sample KS; both samples sorted ascending.
KsResult ks_two_sample(std::span<const double> sorted_a, std::span<const double> sorted_b);

// sup over the grid of |empirical transform - closed form|.
double empirical_cf_distance(std::span<const double> sample,
                             const std::function<double(double)>& cf,
                             std::span<const double> t_grid);
double empirical_lt_distance(std::span<const double> sample,
                             const std::function<double(double)>& lt,
                             std::span<const double> s_grid);

} // namespace harrisar1
