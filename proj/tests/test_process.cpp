#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "harrisar1/process.hpp"

using namespace harrisar1;

namespace {

SchemeSpec constant_add(double b, int k, double c) {
    SchemeSpec spec;
    spec.combiner = Combiner::Add;
    spec.b = b;
    spec.k = k;
    spec.innovation = [c](RandomStream&) { return c; };
    return spec;
}

} // namespace

TEST_SUITE("process") {

TEST_CASE("spec validation") {
    SchemeSpec spec = constant_add(0.5, 1, 1.0);
    CHECK_NOTHROW(spec.validate());

    spec.randomized = true; // randomized requires p
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.p = 1.5;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.p = 0.5;
    CHECK_NOTHROW(spec.validate());

    spec.b = 1.2; // additive schemes contract
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    SchemeSpec min_spec = constant_add(0.5, 1, 1.0);
    min_spec.combiner = Combiner::Min;
    CHECK_THROWS_AS(min_spec.validate(), std::invalid_argument); // needs b > 1
    min_spec.b = 2.0;
    CHECK_NOTHROW(min_spec.validate());

    SchemeSpec custom = constant_add(0.5, 2, 1.0);
    custom.init = InitMode::Custom;
    custom.init_values = {1.0}; // needs k values
    CHECK_THROWS_AS(custom.validate(), std::invalid_argument);
    custom.init_values = {1.0, 2.0};
    CHECK_NOTHROW(custom.validate());

    SchemeSpec no_innov;
    CHECK_THROWS_AS(no_innov.validate(), std::invalid_argument);
}

TEST_CASE("binomial thinning endpoints") {
    RandomStream rng(5);
    CHECK(thin(1.0 - 1e-15, 40, rng) == 40);
    CHECK(thin(1e-15, 40, rng) == 0);
    double sum = 0;
    for (int i = 0; i < 20000; ++i) sum += static_cast<double>(thin(0.3, 10, rng));
    CHECK(sum / 20000 == doctest::Approx(3.0).epsilon(0.03));
}

TEST_CASE("deterministic additive recursion matches the closed form") {
    // X_{n+1} = b X_n + c from X_0 = c: X_n = c * (1 - b^{n+1}) / (1 - b).
    const double b = 0.5, c = 1.0;
    const auto traj = simulate(constant_add(b, 1, c), 10, 1, 7);
    REQUIRE(traj.size() == 1);
    REQUIRE(traj[0].aggregate.size() == 11);
    for (int n = 0; n <= 10; ++n) {
        const double expected = c * (1.0 - std::pow(b, n + 1)) / (1.0 - b);
        CHECK(traj[0].aggregate[n] == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("component count and aggregation") {
    SchemeSpec spec = constant_add(0.5, 3, 1.0);
    const auto traj = simulate(spec, 4, 2, 9);
    REQUIRE(traj.size() == 2);
    for (const auto& t : traj) {
        REQUIRE(t.components.size() == 3);
        for (const auto& series : t.components) REQUIRE(series.size() == 5);
        // additive aggregate is the component sum
        for (std::size_t n = 0; n < 5; ++n) {
            double sum = 0;
            for (const auto& series : t.components) sum += series[n];
            CHECK(t.aggregate[n] == doctest::Approx(sum).epsilon(1e-14));
        }
    }
}

TEST_CASE("aggregate_series folds each combiner") {
    const std::vector<std::vector<double>> comps = {{1.0, 5.0}, {3.0, 2.0}};
    CHECK(aggregate_series(comps, Combiner::Add)[0] == 4.0);
    CHECK(aggregate_series(comps, Combiner::Max)[1] == 5.0);
    CHECK(aggregate_series(comps, Combiner::Min)[0] == 1.0);
    CHECK(aggregate_series(comps, Combiner::Min)[1] == 2.0);
}

TEST_CASE("max and min recursions by hand") {
    SchemeSpec spec;
    spec.combiner = Combiner::Max;
    spec.b = 0.5;
    spec.k = 1;
    spec.innovation = [](RandomStream&) { return 1.0; };
    const auto traj = simulate(spec, 3, 1, 1);
    // X_0 = 1, then X_{n+1} = max(0.5 X_n, 1) = 1 forever.
    for (double v : traj[0].aggregate) CHECK(v == doctest::Approx(1.0));

    SchemeSpec mn;
    mn.combiner = Combiner::Min;
    mn.b = 2.0;
    mn.k = 1;
    mn.innovation = [](RandomStream&) { return 1.0; };
    const auto tmin = simulate(mn, 3, 1, 1);
    // X_{n+1} = min(2 X_n, 1) = 1 from X_0 = 1.
    for (double v : tmin[0].aggregate) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("thinned recursion stays on integers") {
    SchemeSpec spec;
    spec.combiner = Combiner::ThinnedAdd;
    spec.b = 0.5;
    spec.k = 2;
    spec.innovation = [](RandomStream&) { return 5.0; };
    const auto traj = simulate(spec, 20, 3, 11);
    for (const auto& t : traj)
        for (double v : t.aggregate) {
            CHECK(v >= 0.0);
            CHECK(v == std::floor(v));
        }
}

TEST_CASE("simulation is reproducible and independent of path count") {
    SchemeSpec spec = constant_add(0.5, 2, 1.0);
    spec.randomized = true;
    spec.p = 0.5;
    spec.innovation = [](RandomStream& r) { return r.exponential(); };
    const auto a = simulate(spec, 8, 3, 42);
    const auto b = simulate(spec, 8, 3, 42);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t n = 0; n < a[i].aggregate.size(); ++n)
            CHECK(a[i].aggregate[n] == b[i].aggregate[n]);

    // Substream seeding: path 1 is the same whether 2 or 3 paths are run.
    const auto c = simulate(spec, 8, 2, 42);
    for (std::size_t n = 0; n < c[1].aggregate.size(); ++n)
        CHECK(c[1].aggregate[n] == a[1].aggregate[n]);

    // Different seeds decouple.
    const auto d = simulate(spec, 8, 2, 43);
    CHECK(d[0].aggregate.back() != a[0].aggregate.back());
}

TEST_CASE("custom initial state") {
    SchemeSpec spec = constant_add(0.5, 2, 0.0);
    spec.init = InitMode::Custom;
    spec.init_values = {3.0, 5.0};
    const auto traj = simulate(spec, 1, 1, 1);
    CHECK(traj[0].components[0][0] == 3.0);
    CHECK(traj[0].components[1][0] == 5.0);
    CHECK(traj[0].aggregate[0] == 8.0);
}

TEST_CASE("trajectory csv format") {
    SchemeSpec spec = constant_add(0.5, 2, 1.0);
    const auto traj = simulate(spec, 2, 2, 3);
    std::ostringstream ss;
    write_trajectories_csv(ss, traj);
    const std::string text = ss.str();
    CHECK(text.rfind("path,n,component_1,component_2,aggregate\n", 0) == 0);
    // 1 header + 2 paths * 3 rows
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
}

} // TEST_SUITE
