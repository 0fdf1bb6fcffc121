#include "doctest.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "harrisar1/lattice_pmf.hpp"
#include "harrisar1/rng.hpp"

using namespace harrisar1;

namespace {

LatticePmf geometric(double theta, std::size_t n, std::int64_t offset = 0,
                     std::int64_t stride = 1) {
    LatticePmf p;
    p.offset = offset;
    p.stride = stride;
    p.weights.resize(n);
    double w = 1.0 - theta;
    for (auto& v : p.weights) {
        v = w;
        w *= theta;
    }
    p.truncation_mass = std::pow(theta, static_cast<double>(n));
    return p;
}

} // namespace

TEST_SUITE("lattice_pmf") {

TEST_CASE("indexing and mass") {
    LatticePmf p;
    p.offset = 1;
    p.stride = 2;
    p.weights = {0.5, 0.3, 0.2};
    p.truncation_mass = 0.0;
    CHECK(p.value_at(0) == 1);
    CHECK(p.value_at(2) == 5);
    CHECK(p.table_mass() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.mean() == doctest::Approx(0.5 * 1 + 0.3 * 3 + 0.2 * 5).epsilon(1e-15));
    CHECK_NOTHROW(p.validate());
    p.weights[0] = 0.4; // mass now 0.9 with no truncation to absorb it
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("convolution of two geometrics is negative binomial") {
    const double theta = 0.5;
    const LatticePmf g = geometric(theta, 60);
    const LatticePmf nb = convolve(g, g, 1 << 10);
    for (std::size_t j = 0; j < 40; ++j) {
        const double expected =
            (static_cast<double>(j) + 1.0) * std::pow(1.0 - theta, 2.0) * std::pow(theta, j);
        CHECK(nb.weights[j] == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("convolution respects offsets and strides") {
    const LatticePmf a = geometric(0.4, 30, 1, 2); // {1, 3, 5, ...}
    const LatticePmf b = geometric(0.4, 30, 3, 4); // {3, 7, 11, ...}
    const LatticePmf c = convolve(a, b, 1 << 10);
    CHECK(c.offset == 4);
    CHECK(c.stride == 2); // gcd(2, 4)
    CHECK(c.weights[0] == doctest::Approx(0.6 * 0.6).epsilon(1e-14));
}

TEST_CASE("total variation") {
    const LatticePmf g = geometric(0.5, 60);
    CHECK(total_variation(g, g) == doctest::Approx(0.0));
    LatticePmf shifted = g;
    shifted.offset = 1000;
    CHECK(total_variation(g, shifted) == doctest::Approx(1.0).epsilon(1e-12));
    // Half the truncated mass counts as distance.
    LatticePmf cut = g;
    cut.weights.resize(1);
    cut.truncation_mass = 1.0 - cut.weights[0];
    const double expected = 1.0 - cut.weights[0]; // sum of dropped atoms, halves cancel
    CHECK(total_variation(g, cut) == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("sampling is deterministic and hits the lattice") {
    const LatticePmf g = geometric(0.3, 50, 2, 3);
    RandomStream r1(99), r2(99);
    for (int i = 0; i < 200; ++i) {
        const auto a = g.sample(r1);
        CHECK(a == g.sample(r2));
        CHECK((a - 2) % 3 == 0);
    }
}

TEST_CASE("csv output") {
    const LatticePmf g = geometric(0.5, 3);
    std::ostringstream ss;
    g.write_csv(ss);
    CHECK(ss.str().rfind("value,probability\n", 0) == 0);
    CHECK(ss.str().find("0,0.5\n") != std::string::npos);
}

} // TEST_SUITE
