#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "hardwall/exact.hpp"
#include "hardwall/expectation.hpp"
#include "hardwall/trial.hpp"
#include "hardwall/varsolve.hpp"

using namespace hardwall;

TEST_CASE("normalization holds across random trial specs") {
    std::mt19937 rng(987654321u);
    std::uniform_real_distribution<double> rate(0.0, 30.0);
    std::uniform_real_distribution<double> cutoff(0.2, 8.0);
    std::bernoulli_distribution gaussian(0.5);
    const QuadratureConfig qcfg;

    for (int i = 0; i < 100; ++i) {
        const TrialSpec spec{gaussian(rng) ? 2.0 : 1.0, rate(rng), cutoff(rng)};
        INFO("spec b=" << spec.decay_exponent << " a=" << spec.decay_rate
                       << " z=" << spec.cutoff_radius);
        const NormalizedTrial t = normalize(spec, qcfg);
        const double total = four_pi * t.norm_squared * weighted_moment(spec, 2, qcfg).value;
        CHECK(std::abs(total - 1.0) <= 1e-8);
        CHECK(density(t, spec.cutoff_radius) == 0.0);
    }
}

TEST_CASE("mean radius stays inside the wall and shrinks with the decay rate") {
    const QuadratureConfig qcfg;
    for (double b : {1.0, 2.0}) {
        double previous = 2.0;  // open upper bound: mean radius < z = 2
        for (int k = 0; k < 20; ++k) {
            const double a = 0.25 * k * (b == 1.0 ? 1.0 : 0.5);
            const NormalizedTrial t = normalize(TrialSpec{b, a, 2.0}, qcfg);
            const double r_mean = mean_radius(t, qcfg);
            INFO("b=" << b << " a=" << a);
            CHECK(r_mean > 0.0);
            CHECK(r_mean < 2.0);
            if (k > 0) CHECK(r_mean < previous);
            previous = r_mean;
        }
    }
}

TEST_CASE("free-wall ground energy scales as the inverse squared cutoff") {
    const PotentialModel free_wall = CornellPotential{0.0, 0.0};
    std::vector<double> scaled;
    for (double z : {0.5, 1.0, 2.0, 5.0})
        scaled.push_back(ground_state(free_wall, z, 1.0, ExactConfig{}).energy * z * z);
    for (double v : scaled)
        CHECK(v == Catch::Approx(scaled.front()).epsilon(1e-6));
}

TEST_CASE("constant potential offset shifts the energy without moving the optimum") {
    const PotentialModel base_model = GlobalPotential{0.5, 2.0, 0.8};
    const PotentialModel moved_model = GlobalPotential{0.5, 2.0, 1.8};
    const VariationalSolution base = minimize_energy(base_model, 1.0, 2.0, 1.0);
    const VariationalSolution moved = minimize_energy(moved_model, 1.0, 2.0, 1.0);
    SolveOptions defaults;
    CHECK(moved.energy - base.energy == Catch::Approx(1.0).margin(1e-8));
    CHECK(std::abs(moved.a_star - base.a_star) <= defaults.tolerance_a);
}
