#pragma once

// Cut-off trial family psi(r) = N (r - z) e^{-a r^b} on the ball r <= z.
// The amplitude is negative on [0, z) and vanishes at the wall; every
// observable uses the squared modulus, so no sign convention is imposed.
// a = 0 is a valid degenerate member (pure polynomial trial) and supplies
// the exact analytic anchors used throughout the tests.

#include <cmath>
#include <stdexcept>

#include "hardwall/quadrature.hpp"

namespace hardwall {

inline constexpr double four_pi = 4.0 * 3.14159265358979323846;

struct TrialSpec {
    double decay_exponent = 1.0;  // b > 0; closed-form cross-checks exist for 1 and 2
    double decay_rate = 0.0;      // a >= 0, GeV^b
    double cutoff_radius = 1.0;   // z > 0, GeV^-1
};

inline void validate(const TrialSpec& spec) {
    if (!(spec.cutoff_radius > 0.0) || !std::isfinite(spec.cutoff_radius))
        throw std::invalid_argument("trial: cutoff_radius must be positive");
    if (!(spec.decay_rate >= 0.0) || !std::isfinite(spec.decay_rate))
        throw std::invalid_argument("trial: decay_rate must be >= 0");
    if (!(spec.decay_exponent > 0.0) || !std::isfinite(spec.decay_exponent))
        throw std::invalid_argument("trial: decay_exponent must be > 0");
}

struct NormalizedTrial {
    TrialSpec spec;
    double norm_squared = 0.0;  // N^2, GeV^3
};

inline double unnormalized_amplitude(const TrialSpec& spec, double r) {
    validate(spec);
    if (r < 0.0) throw std::domain_error("trial amplitude: r must be >= 0");
    if (r >= spec.cutoff_radius) return 0.0;  // hard wall; exact zero at r = z
    return (r - spec.cutoff_radius) *
           std::exp(-spec.decay_rate * std::pow(r, spec.decay_exponent));
}

// int_0^z r^p (r - z)^2 e^{-2 a r^b} dr -- the shared building block of the
// normalization, the radial moments, and the potential expectations.
inline QuadratureResult weighted_moment(const TrialSpec& spec, double power,
                                        const QuadratureConfig& cfg = {}) {
    validate(spec);
    const double a = spec.decay_rate, b = spec.decay_exponent, z = spec.cutoff_radius;
    return integrate(
        [=](double r) {
            const double cut = r - z;
            return std::pow(r, power) * cut * cut * std::exp(-2.0 * a * std::pow(r, b));
        },
        0.0, z, cfg);
}

inline NormalizedTrial normalize(const TrialSpec& spec, const QuadratureConfig& cfg = {}) {
    const double i2 = weighted_moment(spec, 2.0, cfg).value;
    return {spec, 1.0 / (four_pi * i2)};
}

// |psi(0)|^2 = N^2 z^2
inline double wfo(const NormalizedTrial& t) {
    validate(t.spec);
    return t.norm_squared * t.spec.cutoff_radius * t.spec.cutoff_radius;
}

inline double mean_radius(const NormalizedTrial& t, const QuadratureConfig& cfg = {}) {
    return four_pi * t.norm_squared * weighted_moment(t.spec, 3.0, cfg).value;
}

inline double density(const NormalizedTrial& t, double r) {
    const double amp = unnormalized_amplitude(t.spec, r);
    return t.norm_squared * amp * amp;
}

}  // namespace hardwall
