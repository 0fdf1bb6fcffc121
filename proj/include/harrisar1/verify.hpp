#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "harrisar1/exponent.hpp"
#include "harrisar1/lattice_pmf.hpp"
#include "harrisar1/laws.hpp"

namespace harrisar1 {

enum class TransformKind { CF, LT, PGF, SF, DF };
enum class StabilityKind { Sum, Max, Min };

const char* to_string(TransformKind k);
const char* to_string(StabilityKind k);

/// A law reduced to the single transform the identity checks evaluate:
/// CF/LT at t >= 0, p.g.f. at s in [0,1], s.f./d.f. at x >= 0.
struct TransformLaw {
    TransformKind kind = TransformKind::CF;
    std::string name;
    std::function<double(double)> eval;
    /// p.g.f. through the deficit w = 1 - s^m (PGF kind only).  Scaling acts
    /// as w -> b*w, so the scaled factor never needs an m-th root of s'.
    std::function<std::complex<double>(std::complex<double>)> eval_at_deficit;
    int gap = 1;
    double scale = 1.0; // natural grid center
};

TransformLaw transform_of(const GenSemiAlphaLaplaceLaw& law);
TransformLaw transform_of(const GenSemiMLLaw& law);
TransformLaw transform_of(const DiscreteGenSemiMLLaw& law);
TransformLaw transform_of(const GenSemiParetoLaw& law);
TransformLaw transform_of(const GammaMaxSemiStableLaw& law);

/// Scaled evaluation point of the AR(1) pairing with multiplier b:
/// CF/LT: b*t.  PGF: s' with 1 - s'^m = b(1 - s^m), the thinning composition.
/// DF/SF: x/b (max schemes use b < 1, min schemes b > 1).
double scaled_point(TransformKind kind, int gap, double b, double point);

/// Grid used when the caller does not supply one: standard_grid around
/// law.scale, except PGF where s is mapped from log-spaced deficits.
std::vector<double> default_grid(const TransformLaw& law);

struct PointRecord {
    double point = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    std::string note; // set when the point was skipped or a condition named
};

struct VerificationReport {
    std::string check_name;
    std::string grid;
    nlohmann::ordered_json parameters;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool passed = false;
    std::vector<PointRecord> worst;                         // top offenders
    std::vector<std::pair<double, double>> residual_table;  // SSD checks only

    nlohmann::ordered_json to_json() const;
};

/// sup over the grid of |T(x) - P_H(T(scaled x))| with
/// P_H(z) = z / {a - (a-1) z^k}^{1/k}.  Zero (to rounding) exactly when the
/// law is the fixed point of the k-component scheme with multiplier b.  k is
/// real so negative controls can perturb it.
VerificationReport harris_fixed_point_residual(const TransformLaw& law, double a, double b,
                                               double k, StabilityKind kind,
                                               std::span<const double> grid,
                                               double threshold = 1e-11);

/// sup over the grid of |p*T^k(scaled) + (1-p)*T^k(scaled)*T^k(x) - T^k(x)|,
/// the one-step balance a stationary randomized scheme must satisfy.
VerificationReport stationarity_identity_residual(const TransformLaw& law, double p, double b,
                                                  int k, std::span<const double> grid,
                                                  double threshold = 1e-11);

/// Residual r(x) = T(x) / T(scaled x) of the semi-selfdecomposability
/// factorization, checked against the necessary validity conditions of the
/// law's transform kind (range, monotonicity, boundary limits).  The full
/// r table over the grid is returned in residual_table.
VerificationReport ssd_residual(const TransformLaw& law, double scale,
                                std::span<const double> grid);

/// PGF-kind SSD: extracts the cofactor's coefficients on the unit circle
/// (nonnegative, summing to one with the aliased tail) and identifies the
/// cofactor with its closed Harris-sum form on a real grid.
VerificationReport ssd_residual_pgf(const DiscreteGenSemiMLLaw& law, double scale,
                                    std::size_t n_points = std::size_t{1} << 14);

/// sup over the grid of |T(x)/T(scaled x) - g(T(scaled x))| with
/// g(z) = {a - (a-1) z^k}^{-1/k}: the SSD cofactor equals the zero-offset
/// Harris-sum transform exactly when scale matches the exponent's own b.
VerificationReport ssd_cofactor_identification(const TransformLaw& law, double scale, double a,
                                               double k, std::span<const double> grid,
                                               double threshold = 1e-11);

/// Brute-force law of a Harris(1,a,k) random sum: sum over the support
/// {1, 1+k, ...} (up to n_trunc) of P(N = n) * innov^{*n}, built by repeated
/// explicit convolution truncated at max_value.  Throws if either tail
/// budget (innovation table or Harris weight beyond n_trunc) exceeds 1e-10.
LatticePmf harris_sum_convolution_oracle(const LatticePmf& innov, double a, int k,
                                         std::int64_t n_trunc,
                                         std::int64_t max_value = std::int64_t{1} << 14);

/// Brute-force check of E[T^N] = P_H(T): compares the truncated series
/// sum_m P(N = 1+km) T(x)^{1+km} against the closed composition pointwise.
/// The pass threshold is the Harris tail mass beyond n_trunc plus 1e-12.
VerificationReport harris_extreme_series_oracle(const TransformLaw& law, double a, int k,
                                                std::span<const double> x_grid,
                                                std::int64_t n_trunc);

/// Scaling residual of psi against a second multiplier b2 (with its implied
/// a2 = b2^{-alpha}).  With ln b / ln b2 irrational only the pure power law
/// (beta = 0) can satisfy both scaling identities, so this residual is large
/// for beta != 0 and at rounding level for beta = 0.
VerificationReport incommensurable_scaling_residual(const SemiStableExponent& psi, double b2,
                                                    std::span<const double> grid,
                                                    double threshold);

} // namespace harrisar1
