#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "harrisar1/harris.hpp"
#include "harrisar1/laws.hpp"
#include "harrisar1/verify.hpp"

using namespace harrisar1;

namespace {

SemiStableExponent matched(double a, double alpha, double beta_frac, Tail tail) {
    const double b = std::pow(a, -1.0 / alpha);
    return SemiStableExponent(1.0, alpha, beta_frac * SemiStableExponent::beta_bound(alpha, b),
                              b, tail);
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("scaled argument per transform kind") {
    CHECK(scaled_point(TransformKind::CF, 1, 0.5, 2.0) == doctest::Approx(1.0));
    CHECK(scaled_point(TransformKind::LT, 1, 0.5, 2.0) == doctest::Approx(1.0));
    // pgf: deficit scales, 1 - s' = b (1 - s)
    CHECK(scaled_point(TransformKind::PGF, 1, 0.5, 0.8) == doctest::Approx(0.9));
    CHECK(scaled_point(TransformKind::SF, 1, 2.0, 2.0) == doctest::Approx(1.0));
    CHECK(scaled_point(TransformKind::DF, 1, 0.5, 2.0) == doctest::Approx(4.0));
}

TEST_CASE("fixed point holds at matched parameters and breaks off them") {
    const double a = 2.0;
    const int k = 1;
    const GenSemiParetoLaw law(matched(a, 1.0, 0.0, Tail::Increasing), k);
    const TransformLaw t = transform_of(law);
    const auto grid = default_grid(t);
    const double b_scheme = a; // min scheme: multiplier a^{1/alpha}

    const auto ok =
        harris_fixed_point_residual(t, a, b_scheme, k, StabilityKind::Min, grid);
    CHECK(ok.passed);
    CHECK(ok.max_residual < 1e-12);

    // a' = 1.01 a moves the residual to the 1e-3 scale: detectable.
    const auto off =
        harris_fixed_point_residual(t, 1.01 * a, b_scheme, k, StabilityKind::Min, grid);
    CHECK(off.max_residual > 1e-4);
    CHECK_FALSE(off.passed);
}

TEST_CASE("pure power laws pass at any matched multiplier") {
    // beta = 0: any b' with a' = b'^alpha (min side) satisfies the identity.
    const GenSemiParetoLaw law(SemiStableExponent(1.0, 1.0, 0.0, 0.5, Tail::Increasing), 2);
    const TransformLaw t = transform_of(law);
    const auto grid = default_grid(t);
    for (double b2 : {1.7, 3.0, 9.0}) {
        const auto rep =
            harris_fixed_point_residual(t, b2, b2, 2, StabilityKind::Min, grid);
        CHECK(rep.passed);
    }
}

TEST_CASE("stationarity balance and its failure under a wrong p") {
    const double a = 2.0;
    const int k = 2;
    const GenSemiAlphaLaplaceLaw law(matched(a, 1.5, 0.8, Tail::Increasing), k);
    const TransformLaw t = transform_of(law);
    const auto grid = default_grid(t);
    const double b = std::pow(a, -1.0 / 1.5);

    CHECK(stationarity_identity_residual(t, 1.0 / a, b, k, grid).passed);
    const auto off = stationarity_identity_residual(t, 0.55, b, k, grid);
    CHECK(off.max_residual > 1e-4);
}

TEST_CASE("pairing and parameter guards") {
    const GenSemiParetoLaw law(matched(2.0, 1.0, 0.0, Tail::Increasing), 1);
    const TransformLaw t = transform_of(law);
    const auto grid = default_grid(t);
    // survival transform cannot certify a sum scheme
    CHECK_THROWS_AS(harris_fixed_point_residual(t, 2.0, 0.5, 1, StabilityKind::Sum, grid),
                    std::invalid_argument);
    // min schemes expand: b must exceed 1
    CHECK_THROWS_AS(harris_fixed_point_residual(t, 2.0, 0.5, 1, StabilityKind::Min, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(harris_fixed_point_residual(t, 0.9, 2.0, 1, StabilityKind::Min, grid),
                    std::invalid_argument);
}

TEST_CASE("ssd residual at scale 1 is the constant 1") {
    const GenSemiParetoLaw law(matched(2.0, 1.3, 0.8, Tail::Increasing), 2);
    const TransformLaw t = transform_of(law);
    const auto grid = default_grid(t);
    const auto rep = ssd_residual(t, 1.0, grid);
    CHECK(rep.passed);
    CHECK(rep.max_residual == doctest::Approx(0.0));
}

TEST_CASE("ssd residual allows a defective survival limit") {
    // r(x) -> p^{1/k} < 1 as x -> inf is fine for survival functions.
    const GenSemiParetoLaw law(SemiStableExponent(1.0, 1.0, 0.0, 0.5, Tail::Increasing), 2);
    const TransformLaw t = transform_of(law);
    const auto rep = ssd_residual(t, 0.3, default_grid(t));
    CHECK(rep.passed);
}

TEST_CASE("ssd cofactor is the zero-offset harris transform at the law's own b") {
    const double a = 2.0;
    const int k = 2;
    const double b = std::pow(a, -1.0 / 1.0);
    const GenSemiParetoLaw law(matched(a, 1.0, 0.8, Tail::Increasing), k);
    const TransformLaw t = transform_of(law);
    const auto grid = default_grid(t);
    const auto rep = ssd_cofactor_identification(t, b, a, k, grid);
    CHECK(rep.passed);
    CHECK(rep.max_residual < 1e-12);
}

TEST_CASE("convolution oracle: degenerate innovations give a point mass") {
    LatticePmf delta0;
    delta0.weights = {1.0};
    const LatticePmf res = harris_sum_convolution_oracle(delta0, 2.0, 1, 100);
    CHECK(res.weights.size() == 1);
    CHECK(res.weights[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res.offset == 0);
}

TEST_CASE("convolution oracle: unit innovations recover the harris count") {
    LatticePmf delta1;
    delta1.offset = 1;
    delta1.weights = {1.0};
    const LatticePmf res = harris_sum_convolution_oracle(delta1, 2.0, 1, 200);
    const LatticePmf expected = HarrisLaw(2.0, 1).pmf(200);
    CHECK(total_variation(res, expected) < 1e-12);
}

TEST_CASE("convolution oracle preserves innovation lattices") {
    LatticePmf even; // mass on {0, 2}
    even.stride = 2;
    even.weights = {0.5, 0.5};
    const LatticePmf res = harris_sum_convolution_oracle(even, 2.0, 1, 300);
    CHECK(res.stride == 2);
    CHECK(res.offset % 2 == 0);
}

TEST_CASE("convolution oracle rejects an unreachable truncation budget") {
    LatticePmf geo;
    geo.weights.resize(64);
    double w = 0.5;
    for (auto& v : geo.weights) {
        v = w;
        w *= 0.5;
    }
    geo.truncation_mass = std::pow(0.5, 64.0);
    CHECK_THROWS_AS(harris_sum_convolution_oracle(geo, 2.0, 2, 3), std::invalid_argument);
}

TEST_CASE("extreme series oracle agrees with the composition") {
    const GammaMaxSemiStableLaw law(matched(2.0, 1.2, 0.0, Tail::Decreasing), 2);
    const TransformLaw t = transform_of(law);
    const auto rep = harris_extreme_series_oracle(t, 2.0, 2, default_grid(t), 300);
    CHECK(rep.passed);
    CHECK(rep.max_residual < 1e-10);
}

TEST_CASE("incommensurable multiplier scaling") {
    SemiStableExponent bent(1.0, 1.0, 0.8 * SemiStableExponent::beta_bound(1.0, 0.5), 0.5,
                            Tail::Increasing);
    const auto grid = standard_grid(1.0);
    const double b2 = std::pow(0.5, 1.0 / 1.41421356237309515);
    const auto rep = incommensurable_scaling_residual(bent, b2, grid, 1e-4);
    CHECK(rep.max_residual > 1e-3); // detects the second multiplier
}

TEST_CASE("reports serialize") {
    const GenSemiParetoLaw law(matched(2.0, 1.0, 0.0, Tail::Increasing), 1);
    const TransformLaw t = transform_of(law);
    const auto rep =
        harris_fixed_point_residual(t, 2.0, 2.0, 1, StabilityKind::Min, default_grid(t));
    const auto j = rep.to_json();
    CHECK(j.contains("check_name"));
    CHECK(j.contains("max_residual"));
    CHECK(j.contains("threshold"));
    CHECK(j.contains("passed"));
    CHECK(j["passed"].get<bool>());
}

TEST_CASE("default grids") {
    const GenSemiParetoLaw sf_law(SemiStableExponent(1.0, 1.0, 0.0, 0.5, Tail::Increasing), 1);
    const auto sf_grid = default_grid(transform_of(sf_law));
    CHECK(sf_grid.size() == 1025);

    SemiStableExponent psi(1.0, 1.0, 0.0, 0.5, Tail::Increasing);
    const DiscreteGenSemiMLLaw pgf_law(psi, 1, 1);
    const auto s_grid = default_grid(transform_of(pgf_law));
    CHECK(s_grid.front() == 0.0);
    CHECK(s_grid.back() == doctest::Approx(1.0 - 1e-4).epsilon(1e-10));
    for (std::size_t i = 1; i < s_grid.size(); ++i) CHECK(s_grid[i] > s_grid[i - 1]);
}

TEST_CASE("gapped pgf ssd report validates coefficients") {
    SemiStableExponent psi(1.0, 1.0, 0.0, 0.5, Tail::Increasing);
    const DiscreteGenSemiMLLaw law(psi, 2, 2);
    const auto rep = ssd_residual_pgf(law, 0.5);
    CHECK(rep.passed);
    CHECK(rep.parameters.contains("min_coefficient"));
    CHECK(rep.parameters["min_coefficient"].get<double>() > -1e-10);
}

} // TEST_SUITE
