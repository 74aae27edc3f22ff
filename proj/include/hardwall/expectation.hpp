#pragma once

// Kinetic, potential, and total-energy expectations of a trial state.
//
// Two evaluation conventions coexist deliberately:
//   unnormalized: 4 pi * integral(...) dr, no N^2 factor -- the convention
//                 behind the bundled reference tables and closed forms;
//   normalized:   the same integral times N^2, i.e. the true Rayleigh
//                 quotient. All variational-bound statements use this one.
// The two differ by exactly the factor N^2, which the tests assert.
//
// The kinetic expectation uses the reduced radial function u = r * psi with
// u(0) = u(z) = 0, whose integration-by-parts identity
//   <T> = (4 pi / 2 mu) int_0^z u'(r)^2 dr
// is equivalent to the standard radial operator -(1/2mu)(d_rr + (2/r) d_r).
// u' is computed analytically; no numerical differentiation is involved.

#include <cmath>
#include <stdexcept>

#include "hardwall/potential.hpp"
#include "hardwall/quadrature.hpp"
#include "hardwall/trial.hpp"

namespace hardwall {

enum class ExpectationMode {
    unnormalized,  // "paper" in the CLI
    normalized,
};

inline const char* mode_name(ExpectationMode mode) {
    return mode == ExpectationMode::unnormalized ? "paper" : "normalized";
}

struct ExpectationBreakdown {
    double kinetic = 0.0;    // GeV
    double potential = 0.0;  // GeV
    double total = 0.0;      // GeV, always kinetic + potential
    ExpectationMode mode = ExpectationMode::normalized;
    double reduced_mass = 1.0;  // GeV
};

inline double mode_factor(const NormalizedTrial& t, ExpectationMode mode) {
    return mode == ExpectationMode::normalized ? t.norm_squared : 1.0;
}

// d/dr [ r (r - z) e^{-a r^b} ] = (2r - z - a b r^b (r - z)) e^{-a r^b}
inline double kinetic_expect(const NormalizedTrial& t, double mu, ExpectationMode mode,
                             const QuadratureConfig& cfg = {}) {
    validate(t.spec);
    if (!(mu > 0.0)) throw std::invalid_argument("kinetic_expect: mu must be positive");
    const double a = t.spec.decay_rate, b = t.spec.decay_exponent, z = t.spec.cutoff_radius;
    const double integral =
        integrate(
            [=](double r) {
                const double rb = std::pow(r, b);
                const double du = (2.0 * r - z - a * b * rb * (r - z)) * std::exp(-a * rb);
                return du * du;
            },
            0.0, z, cfg)
            .value;
    return mode_factor(t, mode) * four_pi / (2.0 * mu) * integral;
}

inline double potential_expect(const NormalizedTrial& t, const PotentialModel& model,
                               ExpectationMode mode, const QuadratureConfig& cfg = {}) {
    validate(t.spec);
    validate(model);
    // Expanded over the model terms so the -coulomb/r factor cancels against
    // the r^2 measure analytically instead of numerically.
    const double value = std::visit(
        [&](const auto& m) {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, CornellPotential>) {
                return -m.coulomb_strength * weighted_moment(t.spec, 1.0, cfg).value +
                       m.linear_slope * weighted_moment(t.spec, 3.0, cfg).value;
            } else {
                return m.sqrt_strength * weighted_moment(t.spec, 2.5, cfg).value -
                       m.coulomb_strength * weighted_moment(t.spec, 1.0, cfg).value +
                       m.offset * weighted_moment(t.spec, 2.0, cfg).value;
            }
        },
        model);
    return mode_factor(t, mode) * four_pi * value;
}

inline ExpectationBreakdown hamiltonian_expect(const NormalizedTrial& t,
                                               const PotentialModel& model, double mu,
                                               ExpectationMode mode,
                                               const QuadratureConfig& cfg = {}) {
    ExpectationBreakdown out;
    out.kinetic = kinetic_expect(t, mu, mode, cfg);
    out.potential = potential_expect(t, model, mode, cfg);
    out.total = out.kinetic + out.potential;
    out.mode = mode;
    out.reduced_mass = mu;
    return out;
}

}  // namespace hardwall
