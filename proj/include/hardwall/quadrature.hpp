#pragma once

// Adaptive Gauss-Legendre quadrature on finite intervals.
//
// All radial integrals in this library run over [0, z] against the r^2
// measure, so every integrand in the problem class is continuous; the rule's
// nodes are strictly interior, which additionally keeps user integrands away
// from r = 0 where a naive -A/r factor would trip a 0/0 before cancellation.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hardwall {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 200;  // total bisection budget per integrate() call
    int rule_order = 15;         // Gauss-Legendre points per panel
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
    bool converged = true;
};

// Thrown when the subdivision budget is exhausted before the tolerance is
// met; carries the best estimate accumulated so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, QuadratureResult best)
        : std::runtime_error(msg), best_(best) {}
    const QuadratureResult& best_estimate() const { return best_; }

private:
    QuadratureResult best_;
};

namespace detail {

struct GaussRule {
    std::vector<double> node;    // on (-1, 1), symmetric, ascending
    std::vector<double> weight;
};

// Nodes/weights by Newton iteration on the Legendre recurrence.
inline GaussRule gauss_legendre(int n) {
    GaussRule rule;
    rule.node.resize(n);
    rule.weight.resize(n);
    const double pi = 3.14159265358979323846;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.node[i] = -x;
        rule.node[n - 1 - i] = x;
        rule.weight[i] = rule.weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return rule;
}

struct PanelEval {
    double value;
    double mass;  // sum of |weight * f|, scaled; the roundoff scale of `value`
};

template <class F>
PanelEval eval_panel(F& f, double lo, double hi, const GaussRule& rule) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double sum = 0.0, mass = 0.0;
    for (std::size_t i = 0; i < rule.node.size(); ++i) {
        const double term = rule.weight[i] * f(mid + half * rule.node[i]);
        sum += term;
        mass += std::abs(term);
    }
    return {sum * half, mass * half};
}

}  // namespace detail

inline void validate(const QuadratureConfig& cfg) {
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
        throw std::invalid_argument("quadrature tolerances must be positive");
    if (cfg.max_subdivisions < 1)
        throw std::invalid_argument("max_subdivisions must be >= 1");
    if (cfg.rule_order < 2 || cfg.rule_order > 64)
        throw std::invalid_argument("rule_order out of range [2, 64]");
}

// Integrates f over [lower, upper]. Panels are accepted when the two-child
// refinement agrees with the parent estimate to a tolerance share
// proportional to the panel length, or when the disagreement sits at the
// roundoff floor of the panel's absolute mass (splitting past that floor
// cannot reduce the error and would recurse without bound on sharply peaked
// integrands). The stack is processed left-first so accumulation order (and
// hence the result) is bit-reproducible for a fixed config. Throws
// QuadratureError with the best estimate when the bisection budget runs out.
template <class F>
QuadratureResult integrate(F&& f, double lower, double upper,
                           const QuadratureConfig& cfg = {}) {
    validate(cfg);
    if (!(lower < upper))
        throw std::invalid_argument("integrate: requires lower < upper");

    const detail::GaussRule rule = detail::gauss_legendre(cfg.rule_order);
    const double length = upper - lower;

    struct Panel {
        double lo, hi, estimate;
    };

    const detail::PanelEval whole = detail::eval_panel(f, lower, upper, rule);
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(whole.value));
    constexpr double noise_factor = 64.0 * 2.220446049250313e-16;

    std::vector<Panel> stack;
    stack.push_back({lower, upper, whole.value});

    QuadratureResult res;
    bool budget_hit = false;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (p.lo + p.hi);
        const detail::PanelEval left = detail::eval_panel(f, p.lo, mid, rule);
        const detail::PanelEval right = detail::eval_panel(f, mid, p.hi, rule);
        const double refined = left.value + right.value;
        const double diff = std::abs(refined - p.estimate);
        const double local_tol = tol * ((p.hi - p.lo) / length);
        const double noise_floor = noise_factor * (left.mass + right.mass);
        if (diff <= std::max(local_tol, noise_floor) || mid <= p.lo || mid >= p.hi) {
            res.value += refined;
            res.error_estimate += diff;
            continue;
        }
        if (res.subdivisions >= cfg.max_subdivisions) {
            // Budget exhausted: take this panel as-is and keep draining
            // without further splits so the thrown estimate is complete.
            budget_hit = true;
            res.value += refined;
            res.error_estimate += diff;
            continue;
        }
        ++res.subdivisions;
        stack.push_back({mid, p.hi, right.value});
        stack.push_back({p.lo, mid, left.value});  // left child on top: depth-first, left-first
    }
    if (budget_hit) {
        res.converged = false;
        throw QuadratureError(
            "integrate: subdivision budget exhausted before reaching tolerance",
            res);
    }
    return res;
}

}  // namespace hardwall
