#pragma once

// The two interaction models. Parameters are plain doubles in natural units
// (hbar = c = 1, energies in GeV, lengths in GeV^-1); no unit system is
// enforced. Both models are singular at r = 0 only through the integrable
// -coulomb/r term, which downstream integrals tame with the r^2 measure.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hardwall {

// V(r) = -coulomb_strength / r + linear_slope * r
struct CornellPotential {
    double coulomb_strength = 0.5;  // dimensionless
    double linear_slope = 2.0;      // GeV^2
};

// V(r) = sqrt_strength * sqrt(r) - coulomb_strength / r + offset
struct GlobalPotential {
    double sqrt_strength = 0.5;     // GeV^(3/2)
    double coulomb_strength = 2.0;  // dimensionless
    double offset = 0.8;            // GeV
};

using PotentialModel = std::variant<CornellPotential, GlobalPotential>;

inline void validate(const PotentialModel& model) {
    const bool ok = std::visit(
        [](const auto& m) {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, CornellPotential>)
                return std::isfinite(m.coulomb_strength) && std::isfinite(m.linear_slope);
            else
                return std::isfinite(m.sqrt_strength) && std::isfinite(m.coulomb_strength) &&
                       std::isfinite(m.offset);
        },
        model);
    if (!ok) throw std::invalid_argument("potential parameters must be finite");
}

inline double eval_potential(const PotentialModel& model, double r) {
    validate(model);
    if (!(r > 0.0)) throw std::domain_error("potential is defined for r > 0 only");
    return std::visit(
        [r](const auto& m) {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, CornellPotential>)
                return -m.coulomb_strength / r + m.linear_slope * r;
            else
                return m.sqrt_strength * std::sqrt(r) - m.coulomb_strength / r + m.offset;
        },
        model);
}

inline std::string model_name(const PotentialModel& model) {
    return std::holds_alternative<CornellPotential>(model) ? "cornell" : "global";
}

// Uniform samples of V on [r_min, r_max]. A single-point request is allowed
// only for the degenerate r_min == r_max case.
inline std::vector<std::pair<double, double>> potential_curve(const PotentialModel& model,
                                                              double r_min, double r_max,
                                                              int n_points) {
    if (!(r_min > 0.0)) throw std::domain_error("potential_curve: r_min must be > 0");
    if (r_min > r_max) throw std::invalid_argument("potential_curve: r_min > r_max");
    if (r_min == r_max) {
        if (n_points != 1)
            throw std::invalid_argument("potential_curve: degenerate range needs exactly 1 point");
        return {{r_min, eval_potential(model, r_min)}};
    }
    if (n_points < 2) throw std::invalid_argument("potential_curve: need at least 2 points");
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(n_points));
    const double step = (r_max - r_min) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double r = (i == n_points - 1) ? r_max : r_min + i * step;
        out.emplace_back(r, eval_potential(model, r));
    }
    return out;
}

}  // namespace hardwall
