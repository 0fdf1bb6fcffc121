#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "harrisar1/rng.hpp"

namespace harrisar1 {

struct QuadratureSpec {
    double rel_tol = 1e-9;   // target for the head integral
    double tail_tol = 1e-10; // truncation budget: |cf(T)|/T below this at the last lobe
    int lobes = 64;          // alternating half-periods, summed then averaged
    int head_depth = 60;     // adaptive Simpson recursion cap on the first lobe
};

struct DfValue {
    double value = 0.0; // clamped to [0,1]
    double error = 0.0; // quadrature error estimate
};

// Gil-Pelaez inversion for a real even CF:
//   F(x) = 1/2 + (1/pi) * int_0^inf cf(t) sin(tx)/t dt.
// The head lobe [0, pi/x] is done by adaptive Simpson with the t->0 limit
// (= x) filled analytically; the oscillatory tail is summed lobe by lobe
// between consecutive zeros of sin(tx) and accelerated by repeated averaging
// of the alternating partial sums, which converges even when cf decays as
// slowly as t^{-alpha/k}.
DfValue df_from_cf(const std::function<double(double)>& cf, double x,
                   const QuadratureSpec& quad = {});

// Monotone quantile table over [q_tail, 1 - q_tail] for symmetric laws whose
// only handle is the CF.  Nodes are log-spaced in |x| and mirrored; building
// evaluates df_from_cf once per positive node.
class CfInversionTable {
public:
    CfInversionTable(std::function<double(double)> cf, double scale,
                     std::size_t half_points = 2047, double q_tail = 1e-4,
                     const QuadratureSpec& quad = {});

    double quantile(double u) const; // u clamped into [q_tail, 1-q_tail]
    double sample(RandomStream& rng) const { return quantile(rng.uniform01()); }

    // Largest probability mass between adjacent nodes; bounds the
    // distributional error of table sampling.
    double max_cell_mass() const { return max_cell_mass_; }
    double max_quadrature_error() const { return max_quad_error_; }
    std::size_t size() const { return x_.size(); }

    void write_csv(std::ostream& out) const; // columns: x, F

private:
    std::vector<double> x_;
    std::vector<double> f_;
    double q_lo_;
    double q_hi_;
    double max_cell_mass_ = 0.0;
    double max_quad_error_ = 0.0;
};

} // namespace harrisar1
