#pragma once

// Finite-difference ground state of the reduced radial equation
// -(1/2mu) u'' + V(r) u = E u on (0, z) with hard-wall conditions
// u(0) = u(z) = 0. Central differences on a uniform grid give a symmetric
// tridiagonal matrix; the smallest eigenvalue comes from Sturm-count
// bisection and the eigenvector from inverse iteration. This solver shares
// no code with the variational path, so the two sides of the upper-bound
// comparison stay independent.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hardwall/potential.hpp"

namespace hardwall {

struct ExactConfig {
    std::size_t n_interior = 4000;  // interior grid points at the base resolution
    bool richardson = true;         // solve at h and h/2, extrapolate the energy
    double eigen_tol = 1e-12;       // bisection width on the eigenvalue
};

inline void validate(const ExactConfig& cfg) {
    if (cfg.n_interior < 10)
        throw std::invalid_argument("ExactConfig: n_interior must be >= 10");
    if (!(cfg.eigen_tol > 0.0))
        throw std::invalid_argument("ExactConfig: eigen_tol must be positive");
}

struct ExactSolution {
    double energy = 0.0;            // ground energy, GeV
    std::vector<double> grid;       // r_0 = 0 .. r_{n+1} = z, uniform spacing
    std::vector<double> u;          // reduced eigenfunction on grid, u front/back = 0
    double error_estimate = 0.0;    // Richardson difference, or eigen_tol when disabled
};

namespace detail {

// Interior-node discretization: diag_i = 1/(mu h^2) + V(r_i), off = -1/(2mu h^2).
// r = 0 is never evaluated, so the Coulomb term stays finite everywhere.
struct TridiagSystem {
    std::vector<double> diag;
    double off = 0.0;
    double spacing = 0.0;
};

inline TridiagSystem fd_system(const PotentialModel& model, double z, double mu,
                               std::size_t n) {
    TridiagSystem sys;
    sys.spacing = z / static_cast<double>(n + 1);
    sys.off = -1.0 / (2.0 * mu * sys.spacing * sys.spacing);
    sys.diag.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double r = static_cast<double>(i) * sys.spacing;
        sys.diag.push_back(-2.0 * sys.off + eval_potential(model, r));
    }
    return sys;
}

// Sturm count: number of eigenvalues strictly below x, by the standard
// LDL^T sign recurrence with a pivot floor against exact zeros.
inline std::size_t eigenvalues_below(const TridiagSystem& sys, double x) {
    const double off2 = sys.off * sys.off;
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, off2);
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < sys.diag.size(); ++i) {
        q = (i == 0) ? sys.diag[0] - x : sys.diag[i] - x - off2 / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

inline double smallest_eigenvalue(const TridiagSystem& sys, double tol) {
    double lo = sys.diag[0], hi = sys.diag[0];
    for (double d : sys.diag) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    const double reach = 2.0 * std::abs(sys.off);
    lo -= reach + 1.0;  // Gershgorin with slack so the counts at the ends are 0 and n
    hi += reach + 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval below representable width
        if (eigenvalues_below(sys, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Tridiagonal LU with partial pivoting (constant off-diagonals on input,
// general after row swaps). Pivots are floored so a shift placed exactly on
// the eigenvalue, the whole point of inverse iteration, cannot divide by zero.
struct TridiagLU {
    std::vector<double> dl, d, du, du2;
    std::vector<bool> swapped;
};

inline TridiagLU factor_shifted(const TridiagSystem& sys, double shift) {
    const std::size_t n = sys.diag.size();
    TridiagLU lu;
    lu.d.resize(n);
    lu.dl.assign(n > 0 ? n - 1 : 0, sys.off);
    lu.du.assign(n > 0 ? n - 1 : 0, sys.off);
    lu.du2.assign(n > 1 ? n - 2 : 0, 0.0);
    lu.swapped.assign(n > 0 ? n - 1 : 0, false);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        lu.d[i] = sys.diag[i] - shift;
        scale = std::max(scale, std::abs(lu.d[i]));
    }
    scale = std::max(scale, 2.0 * std::abs(sys.off));
    const double floor = std::numeric_limits<double>::epsilon() * scale;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(lu.d[i]) >= std::abs(lu.dl[i])) {
            if (std::abs(lu.d[i]) < floor) lu.d[i] = (lu.d[i] < 0.0) ? -floor : floor;
            const double fact = lu.dl[i] / lu.d[i];
            lu.dl[i] = fact;
            lu.d[i + 1] -= fact * lu.du[i];
        } else {
            const double fact = lu.d[i] / lu.dl[i];
            lu.d[i] = lu.dl[i];
            lu.dl[i] = fact;
            const double temp = lu.du[i];
            lu.du[i] = lu.d[i + 1];
            lu.d[i + 1] = temp - fact * lu.d[i + 1];
            if (i + 2 < n) {
                lu.du2[i] = lu.du[i + 1];
                lu.du[i + 1] = -fact * lu.du[i + 1];
            }
            lu.swapped[i] = true;
        }
    }
    if (!lu.d.empty() && std::abs(lu.d[n - 1]) < floor)
        lu.d[n - 1] = (lu.d[n - 1] < 0.0) ? -floor : floor;
    return lu;
}

inline void solve_in_place(const TridiagLU& lu, std::vector<double>& b) {
    const std::size_t n = lu.d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!lu.swapped[i]) {
            b[i + 1] -= lu.dl[i] * b[i];
        } else {
            const double temp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = temp - lu.dl[i] * b[i];
        }
    }
    b[n - 1] /= lu.d[n - 1];
    if (n >= 2)
        b[n - 2] = (b[n - 2] - lu.du[n - 2] * b[n - 1]) / lu.d[n - 2];
    for (std::size_t k = n; k-- > 2;) {
        const std::size_t i = k - 2;
        b[i] = (b[i] - lu.du[i] * b[i + 1] - lu.du2[i] * b[i + 2]) / lu.d[i];
    }
}

struct GridEigen {
    double energy = 0.0;
    double spacing = 0.0;
    std::vector<double> u;  // interior values only
};

inline GridEigen fd_ground(const PotentialModel& model, double z, double mu,
                           std::size_t n, double eigen_tol) {
    const TridiagSystem sys = fd_system(model, z, mu, n);
    GridEigen out;
    out.spacing = sys.spacing;
    out.energy = smallest_eigenvalue(sys, eigen_tol);

    const TridiagLU lu = factor_shifted(sys, out.energy);
    std::vector<double> x(n);
    const double pi = 3.14159265358979323846;
    for (std::size_t i = 0; i < n; ++i)
        x[i] = std::sin(pi * static_cast<double>(i + 1) / static_cast<double>(n + 1));

    bool converged = false;
    for (int iter = 0; iter < 50 && !converged; ++iter) {
        std::vector<double> y = x;
        solve_in_place(lu, y);
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw std::runtime_error("ground_state: inverse iteration produced a null vector");
        double overlap = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] /= norm;
            overlap += y[i] * x[i];
        }
        converged = (1.0 - std::abs(overlap)) <= 1e-13;
        x = std::move(y);
    }
    if (!converged)
        throw std::runtime_error("ground_state: inverse iteration did not converge");

    double body = 0.0;
    for (double v : x) body += v;
    if (body < 0.0)
        for (double& v : x) v = -v;
    out.u = std::move(x);
    return out;
}

}  // namespace detail

// Dirichlet ground state on [0, z]. With richardson enabled the energy is
// extrapolated from the base and halved spacings, E = (4 E_fine - E_base)/3,
// and the eigenfunction is reported on the fine grid; the trapezoid rule
// normalizes u to unit L2 on the returned grid.
inline ExactSolution ground_state(const PotentialModel& model, double z, double mu,
                                  const ExactConfig& cfg = {}) {
    validate(cfg);
    validate(model);
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::invalid_argument("ground_state: requires z > 0");
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw std::invalid_argument("ground_state: requires mu > 0");

    const std::size_t n_fine = cfg.richardson ? 2 * cfg.n_interior + 1 : cfg.n_interior;
    detail::GridEigen fine = detail::fd_ground(model, z, mu, n_fine, cfg.eigen_tol);

    ExactSolution sol;
    if (cfg.richardson) {
        const detail::GridEigen base =
            detail::fd_ground(model, z, mu, cfg.n_interior, cfg.eigen_tol);
        sol.energy = (4.0 * fine.energy - base.energy) / 3.0;
        sol.error_estimate = std::abs(fine.energy - base.energy) / 3.0;
    } else {
        sol.energy = fine.energy;
        sol.error_estimate = cfg.eigen_tol;  // algebraic part only; no grid comparison made
    }

    const std::size_t n = fine.u.size();
    sol.grid.resize(n + 2);
    sol.u.resize(n + 2);
    sol.grid.front() = 0.0;
    sol.u.front() = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sol.grid[i + 1] = static_cast<double>(i + 1) * fine.spacing;
        sol.u[i + 1] = fine.u[i];
    }
    sol.grid.back() = z;
    sol.u.back() = 0.0;

    double quad = 0.0;  // trapezoid of u^2; endpoint terms vanish
    for (std::size_t i = 1; i <= n; ++i) quad += sol.u[i] * sol.u[i];
    quad *= fine.spacing;
    const double inv = 1.0 / std::sqrt(quad);
    for (double& v : sol.u) v *= inv;
    return sol;
}

// Observed discretization order from single-grid energies at the three
// finest resolutions: p = log(|E1-E2| / |E2-E3|) / log(h1/h2). Second-order
// central differences give p near 2 on smooth potentials.
inline double convergence_order(const PotentialModel& model, double z, double mu,
                                std::vector<std::size_t> resolutions) {
    if (resolutions.size() < 3)
        throw std::invalid_argument("convergence_order: need at least 3 resolutions");
    std::sort(resolutions.begin(), resolutions.end());
    for (std::size_t n : resolutions)
        if (n < 10)
            throw std::invalid_argument("convergence_order: resolutions must be >= 10");

    const std::size_t k = resolutions.size();
    const std::size_t picks[3] = {k - 3, k - 2, k - 1};
    double energy[3], spacing[3];
    for (int i = 0; i < 3; ++i) {
        const detail::GridEigen g =
            detail::fd_ground(model, z, mu, resolutions[picks[i]], 1e-12);
        energy[i] = g.energy;
        spacing[i] = g.spacing;
    }
    const double d12 = std::abs(energy[0] - energy[1]);
    const double d23 = std::abs(energy[1] - energy[2]);
    if (!(d12 > 0.0) || !(d23 > 0.0))
        throw std::domain_error("convergence_order: resolutions are indistinguishable");
    return std::log(d12 / d23) / std::log(spacing[0] / spacing[1]);
}

}  // namespace hardwall
