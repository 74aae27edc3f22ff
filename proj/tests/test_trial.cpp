#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hardwall/trial.hpp"
#include "oracle.hpp"

using namespace hardwall;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("amplitude") {
    CHECK(unnormalized_amplitude({1.0, 0.0, 1.0}, 1.0) == 0.0);
    CHECK(unnormalized_amplitude({1.0, 0.0, 1.0}, 0.0) == Catch::Approx(-1.0).margin(1e-15));
    CHECK(unnormalized_amplitude({2.0, 1.0, 2.0}, 1.0) ==
          Catch::Approx(-std::exp(-1.0)).epsilon(1e-15));
    CHECK(unnormalized_amplitude({1.0, 0.5, 2.0}, 3.0) == 0.0);  // beyond the wall
    CHECK_THROWS_AS(unnormalized_amplitude({1.0, 0.0, 1.0}, -0.1), std::domain_error);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(normalize({1.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(normalize({1.0, -1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(normalize({0.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("normalization constant") {
    // a = 0: 1/N^2 = 4 pi z^5 / 30
    CHECK(normalize({1.0, 0.0, 1.0}).norm_squared ==
          Catch::Approx(15.0 / (2.0 * pi)).epsilon(1e-12));
    CHECK(normalize({1.0, 0.0, 2.0}).norm_squared ==
          Catch::Approx(15.0 / (64.0 * pi)).epsilon(1e-12));

    // decaying case, frozen from an independent high-precision run
    CHECK(normalize({1.0, 1.0, 1.0}).norm_squared ==
          Catch::Approx(6.0454253572195213).epsilon(1e-10));

    // and against the brute-force oracle
    auto w = [](double r) { return r * r * (r - 1.0) * (r - 1.0) * std::exp(-2.0 * r); };
    const double n2_ref = 1.0 / (four_pi * oracle::trapezoid(w, 0.0, 1.0));
    CHECK(normalize({1.0, 1.0, 1.0}).norm_squared == Catch::Approx(n2_ref).epsilon(1e-8));
}

TEST_CASE("wavefunction at the origin") {
    CHECK(wfo(normalize({1.0, 0.0, 1.0})) == Catch::Approx(15.0 / (2.0 * pi)).epsilon(1e-12));
    CHECK(wfo(normalize({1.0, 0.0, 2.0})) == Catch::Approx(15.0 / (16.0 * pi)).epsilon(1e-12));
    // identity with the density at r = 0
    auto t = normalize({2.0, 0.7, 3.0});
    CHECK(wfo(t) == Catch::Approx(density(t, 0.0)).epsilon(1e-14));
}

TEST_CASE("mean radius") {
    for (double z : {0.5, 1.0, 2.0, 5.0}) {
        CHECK(mean_radius(normalize({1.0, 0.0, z})) == Catch::Approx(z / 2.0).epsilon(1e-12));
        CHECK(mean_radius(normalize({2.0, 0.0, z})) == Catch::Approx(z / 2.0).epsilon(1e-12));
    }
    CHECK(mean_radius(normalize({1.0, 1.0, 1.0})) ==
          Catch::Approx(0.42967658713338576).epsilon(1e-10));

    // near-degenerate decay: limit recovers z/2
    CHECK(mean_radius(normalize({1.0, 1e-10, 2.0})) == Catch::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("density") {
    auto t = normalize({1.0, 0.0, 1.0});
    CHECK(density(t, 1.0) == 0.0);
    CHECK(density(t, 0.5) == Catch::Approx(15.0 / (2.0 * pi) * 0.25).epsilon(1e-12));
    CHECK(density(t, 2.0) == 0.0);
    CHECK_THROWS_AS(density(t, -0.5), std::domain_error);
}

TEST_CASE("random specs stay normalized and bounded") {
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> ua(0.0, 4.0), uz(0.3, 6.0);
    std::uniform_int_distribution<int> ub(1, 2);
    for (int i = 0; i < 30; ++i) {
        TrialSpec spec{static_cast<double>(ub(rng)), ua(rng), uz(rng)};
        auto t = normalize(spec);
        auto integrand = [&](double r) { return four_pi * r * r * density(t, r); };
        CHECK(oracle::trapezoid(integrand, 0.0, spec.cutoff_radius, 1 << 20) ==
              Catch::Approx(1.0).epsilon(1e-8));
        const double mr = mean_radius(t);
        CHECK(mr > 0.0);
        CHECK(mr < spec.cutoff_radius);
    }
}

TEST_CASE("scale covariance of the exponential family") {
    // b = 1, (a, z) -> (a/L, L z): density'(L r) = density(r) / L^3
    const double L = 2.5;
    auto base = normalize({1.0, 1.2, 1.5});
    auto scaled = normalize({1.0, 1.2 / L, 1.5 * L});
    for (double r : {0.0, 0.3, 0.9, 1.4}) {
        CHECK(density(scaled, L * r) ==
              Catch::Approx(density(base, r) / (L * L * L)).epsilon(1e-10));
    }
}
