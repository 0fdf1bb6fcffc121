#pragma once

#include <complex>
#include <span>
#include <vector>

namespace harrisar1 {

enum class Tail {
    Increasing, // psi(x) = lambda x^{ alpha} h(ln x): sum / min / Frechet-positive usage
    Decreasing  // psi(x) = lambda x^{-alpha} h(ln x): max Frechet-type usage
};

/// Semi-stable exponent psi(x) = lambda * x^{+-alpha} * h(ln x) with the
/// canonical log-periodic factor h(u) = exp(beta * sin(2*pi*u / L)),
/// L = |ln b|.  By construction psi satisfies the exact scaling law
///
///   Increasing:  psi(x) = a * psi(b*x),    a = b^{-alpha}, 0 < b < 1
///   Decreasing:  psi(x) = a * psi(c*x),    c = 1/b,        a = c^{alpha}
///
/// for all x > 0.  Every distribution family in this library is built from
/// one of these exponents.  Objects are immutable and all operations are
/// pure.
class SemiStableExponent {
public:
    /// Throws std::invalid_argument on nonpositive lambda/alpha, b outside
    /// (0,1), or |beta| beyond the strict-monotonicity bound
    /// alpha*|ln b|/(2*pi).
    SemiStableExponent(double lambda, double alpha, double beta, double b, Tail tail);

    double lambda() const { return lambda_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double b() const { return b_; }
    Tail tail() const { return tail_; }

    /// Multiplier of the functional equation, a = b^{-alpha} > 1.
    double a() const { return a_; }

    /// Period of h in log-space, L = |ln b|.
    double log_period() const { return log_period_; }

    /// Argument ratio of the functional equation: b for Increasing tails,
    /// 1/b for Decreasing tails.
    double scale_ratio() const { return tail_ == Tail::Increasing ? b_ : 1.0 / b_; }

    /// x at which the pure power part of psi equals 1 (lambda^{-+1/alpha}
    /// depending on the tail direction).
    double natural_scale() const;

    /// psi(x) for x > 0; throws std::domain_error otherwise.
    double operator()(double x) const;

    /// log(psi(z)) for complex z with Re z > 0 (principal branches).  Kept in
    /// log space because the periodic factor can overflow a double even when
    /// psi itself is harmless downstream.
    std::complex<double> log_eval(std::complex<double> z) const;

    /// Inverse of psi on (0, inf): returns x with psi(x) = y to ~1e-13
    /// relative accuracy.  Throws std::range_error for y outside (0, inf).
    double invert(double y) const;

    /// Largest admissible |beta| for the given alpha and b.
    static double beta_bound(double alpha, double b);

private:
    double lambda_, alpha_, beta_, b_;
    Tail tail_;
    double a_, log_period_;
};

/// sup over the grid of |psi(x) - a*psi(r*x)| / max(psi(x), floor) where
/// (a, r) default to the exponent's own functional-equation constants.  The
/// overload with explicit (a, r) exists for perturbation (negative-control)
/// checks and for verifying that a pure power law scales for every b.
double scaling_residual(const SemiStableExponent& psi, std::span<const double> grid);
double scaling_residual(const SemiStableExponent& psi, std::span<const double> grid,
                        double a, double arg_ratio);

/// n log-spaced points covering [lo, hi] inclusive.
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

/// The default check grid: `per_decade` points per decade over `decades`
/// decades centered (in log space) on `scale`.
std::vector<double> standard_grid(double scale, int decades = 4, int per_decade = 256);

} // namespace harrisar1
