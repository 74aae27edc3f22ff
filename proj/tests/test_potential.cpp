#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "hardwall/potential.hpp"

using namespace hardwall;

TEST_CASE("point evaluations") {
    PotentialModel cornell = CornellPotential{0.5, 2.0};
    CHECK(eval_potential(cornell, 1.0) == Catch::Approx(1.5).margin(1e-15));
    CHECK(eval_potential(cornell, 0.5) == Catch::Approx(0.0).margin(1e-15));

    PotentialModel global = GlobalPotential{0.5, 2.0, 0.8};
    CHECK(eval_potential(global, 1.0) == Catch::Approx(-0.7).margin(1e-15));
    CHECK(eval_potential(global, 4.0) == Catch::Approx(1.3).margin(1e-15));
}

TEST_CASE("domain and parameter errors") {
    PotentialModel cornell = CornellPotential{0.5, 2.0};
    CHECK_THROWS_AS(eval_potential(cornell, 0.0), std::domain_error);
    CHECK_THROWS_AS(eval_potential(cornell, -1.0), std::domain_error);

    PotentialModel bad = CornellPotential{std::numeric_limits<double>::quiet_NaN(), 2.0};
    CHECK_THROWS_AS(eval_potential(bad, 1.0), std::invalid_argument);
    PotentialModel inf = GlobalPotential{0.5, std::numeric_limits<double>::infinity(), 0.8};
    CHECK_THROWS_AS(eval_potential(inf, 1.0), std::invalid_argument);
}

TEST_CASE("curves") {
    PotentialModel cornell = CornellPotential{0.5, 2.0};
    auto single = potential_curve(cornell, 0.5, 0.5, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == 0.5);
    CHECK(single[0].second == Catch::Approx(0.0).margin(1e-15));

    PotentialModel global = GlobalPotential{0.5, 2.0, 0.8};
    auto curve = potential_curve(global, 1.0, 4.0, 7);
    REQUIRE(curve.size() == 7);
    CHECK(curve.front().second == Catch::Approx(-0.7).margin(1e-14));
    CHECK(curve.back().first == 4.0);
    CHECK(curve.back().second == Catch::Approx(1.3).margin(1e-14));

    // divergence toward the origin: samples below r = 0.5 decrease monotonically
    auto near0 = potential_curve(cornell, 0.01, 0.5, 50);
    for (std::size_t i = 1; i < near0.size(); ++i) CHECK(near0[i - 1].second < near0[i].second);
    CHECK(near0.front().second < -40.0);

    CHECK_THROWS_AS(potential_curve(cornell, 0.0, 1.0, 5), std::domain_error);
    CHECK_THROWS_AS(potential_curve(cornell, 2.0, 1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(potential_curve(cornell, 1.0, 2.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(potential_curve(cornell, 1.0, 1.0, 2), std::invalid_argument);
}

TEST_CASE("monotone increase for attractive-plus-confining parameters") {
    PotentialModel cornell = CornellPotential{0.5, 2.0};
    PotentialModel global = GlobalPotential{0.5, 2.0, 0.8};
    for (const auto& model : {cornell, global}) {
        auto curve = potential_curve(model, 0.05, 8.0, 200);
        for (std::size_t i = 1; i < curve.size(); ++i)
            CHECK(curve[i].second > curve[i - 1].second);
    }
}
