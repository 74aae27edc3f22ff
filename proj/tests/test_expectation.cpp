#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hardwall/expectation.hpp"
#include "oracle.hpp"

using namespace hardwall;

namespace {
constexpr double pi = 3.14159265358979323846;
const PotentialModel cornell = CornellPotential{0.5, 2.0};
const PotentialModel global_model = GlobalPotential{0.5, 2.0, 0.8};
}  // namespace

TEST_CASE("kinetic anchors") {
    // polynomial member: normalized <T> = 5 / (mu z^2)
    for (double z : {0.5, 1.0, 2.0, 5.0}) {
        auto t = normalize({1.0, 0.0, z});
        CHECK(kinetic_expect(t, 1.0, ExpectationMode::normalized) ==
              Catch::Approx(5.0 / (z * z)).epsilon(1e-12));
    }
    // unnormalized limit at a = 0: 2 pi z^3 / 3
    for (double z : {1.0, 3.0}) {
        auto t = normalize({1.0, 0.0, z});
        CHECK(kinetic_expect(t, 1.0, ExpectationMode::unnormalized) ==
              Catch::Approx(2.0 * pi * z * z * z / 3.0).epsilon(1e-12));
    }

    // decaying case, frozen from an independent high-precision run; equals
    // the closed form (pi/2)(1 - 3 e^-2) for these parameters
    auto t11 = normalize({1.0, 1.0, 1.0});
    const double kin = kinetic_expect(t11, 1.0, ExpectationMode::unnormalized);
    CHECK(kin == Catch::Approx(0.93304382941344213).epsilon(1e-12));
    CHECK(kin == Catch::Approx(pi / 2.0 * (1.0 - 3.0 * std::exp(-2.0))).epsilon(1e-12));

    // brute-force reference on the derivative integrand
    auto du2 = [](double r) {
        const double du = (2.0 * r - 1.0 - r * (r - 1.0)) * std::exp(-r);
        return du * du;
    };
    CHECK(kin == Catch::Approx(2.0 * pi * oracle::trapezoid(du2, 0.0, 1.0)).epsilon(1e-9));

    // reduced mass scaling
    CHECK(kinetic_expect(t11, 2.0, ExpectationMode::unnormalized) ==
          Catch::Approx(kin / 2.0).epsilon(1e-14));
    CHECK_THROWS_AS(kinetic_expect(t11, 0.0, ExpectationMode::normalized),
                    std::invalid_argument);
}

TEST_CASE("potential anchors") {
    // a = 0 normalized Cornell: -5A/(2z) + Bz/2
    auto t = normalize({1.0, 0.0, 1.0});
    CHECK(potential_expect(t, cornell, ExpectationMode::normalized) ==
          Catch::Approx(-0.25).margin(1e-12));
    for (double z : {0.5, 2.0, 5.0}) {
        auto tz = normalize({1.0, 0.0, z});
        CHECK(potential_expect(tz, cornell, ExpectationMode::normalized) ==
              Catch::Approx(-5.0 * 0.5 / (2.0 * z) + 2.0 * z / 2.0).epsilon(1e-12));
    }

    // a = 0 normalized global: 160 A sqrt(z)/231 - 5B/(2z) + C, b irrelevant
    for (double b : {1.0, 2.0}) {
        auto t1 = normalize({b, 0.0, 1.0});
        CHECK(potential_expect(t1, global_model, ExpectationMode::normalized) ==
              Catch::Approx(80.0 / 231.0 - 5.0 + 0.8).epsilon(1e-12));
    }

    // decaying case, frozen + brute force
    auto t11 = normalize({1.0, 1.0, 1.0});
    const double pot = potential_expect(t11, cornell, ExpectationMode::unnormalized);
    CHECK(pot == Catch::Approx(-0.11178841723014192).epsilon(1e-10));
    auto integrand = [](double r) {
        const double w = (r - 1.0) * (r - 1.0) * std::exp(-2.0 * r);
        return w * (-0.5 * r + 2.0 * r * r * r);
    };
    CHECK(pot == Catch::Approx(four_pi * oracle::trapezoid(integrand, 0.0, 1.0)).epsilon(1e-8));
}

TEST_CASE("hamiltonian breakdown") {
    auto t = normalize({1.0, 0.0, 1.0});
    auto h = hamiltonian_expect(t, cornell, 1.0, ExpectationMode::normalized);
    CHECK(h.total == Catch::Approx(4.75).epsilon(1e-12));
    CHECK(h.total == h.kinetic + h.potential);

    // V == 0 via zero Cornell parameters: pure kinetic scaling
    const PotentialModel free_model = CornellPotential{0.0, 0.0};
    for (double z : {1.0, 2.0}) {
        auto tz = normalize({1.0, 0.0, z});
        CHECK(hamiltonian_expect(tz, free_model, 1.0, ExpectationMode::normalized).total ==
              Catch::Approx(5.0 / (z * z)).epsilon(1e-12));
    }

    // global model, quadratic trial, frozen from the high-precision run
    auto tg = normalize({2.0, 0.5, 2.0});
    auto hg = hamiltonian_expect(tg, global_model, 1.0, ExpectationMode::unnormalized);
    CHECK(hg.kinetic == Catch::Approx(8.9387377563582128).epsilon(1e-10));
    CHECK(hg.potential == Catch::Approx(-11.549959000308743).epsilon(1e-10));
    CHECK(hg.total == Catch::Approx(-2.6112212439505298).epsilon(1e-9));
}

TEST_CASE("mode identity and positivity") {
    std::mt19937 rng(101u);
    std::uniform_real_distribution<double> ua(0.0, 3.0), uz(0.4, 5.0);
    std::uniform_int_distribution<int> ub(1, 2);
    for (int i = 0; i < 25; ++i) {
        TrialSpec spec{static_cast<double>(ub(rng)), ua(rng), uz(rng)};
        auto t = normalize(spec);
        for (const auto& model : {cornell, global_model}) {
            auto raw = hamiltonian_expect(t, model, 1.0, ExpectationMode::unnormalized);
            auto norm = hamiltonian_expect(t, model, 1.0, ExpectationMode::normalized);
            CHECK(norm.kinetic == Catch::Approx(raw.kinetic * t.norm_squared).epsilon(1e-12));
            CHECK(norm.potential ==
                  Catch::Approx(raw.potential * t.norm_squared).epsilon(1e-12));
            CHECK(norm.total == Catch::Approx(raw.total * t.norm_squared).epsilon(1e-12));
            CHECK(norm.kinetic > 0.0);
        }
    }
}

TEST_CASE("potential expectation is linear in the parameters") {
    auto t = normalize({2.0, 0.8, 1.7});
    const double alpha = 2.75;
    const PotentialModel g1 = GlobalPotential{0.5, 2.0, 0.8};
    const PotentialModel g2 = GlobalPotential{0.5 * alpha, 2.0 * alpha, 0.8 * alpha};
    CHECK(potential_expect(t, g2, ExpectationMode::normalized) ==
          Catch::Approx(alpha * potential_expect(t, g1, ExpectationMode::normalized))
              .epsilon(1e-12));

    const PotentialModel c1 = CornellPotential{0.5, 2.0};
    const PotentialModel c2 = CornellPotential{0.5 * alpha, 2.0 * alpha};
    CHECK(potential_expect(t, c2, ExpectationMode::normalized) ==
          Catch::Approx(alpha * potential_expect(t, c1, ExpectationMode::normalized))
              .epsilon(1e-12));
}

TEST_CASE("kinetic scale law for the exponential family") {
    // (a, z) -> (a/L, L z) shrinks the normalized kinetic by L^2
    const double L = 3.0;
    auto base = normalize({1.0, 0.9, 1.3});
    auto scaled = normalize({1.0, 0.9 / L, 1.3 * L});
    CHECK(kinetic_expect(scaled, 1.0, ExpectationMode::normalized) ==
          Catch::Approx(kinetic_expect(base, 1.0, ExpectationMode::normalized) / (L * L))
              .epsilon(1e-10));
}
