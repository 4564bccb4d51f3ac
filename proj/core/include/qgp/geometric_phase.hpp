#pragma once

#include <optional>
#include <span>

#include "qgp/numerics.hpp"
#include "qgp/qubit_state.hpp"

namespace qgp {

struct GpEstimate {
    double value = 0.0;           // radians
    double error_estimate = 0.0;  // |doubled-grid - single-grid| quadrature gap
};

// Unitary reference pi (1 + cos theta0), unreduced.
double gp_unitary(double theta0);

// Exact open-system phase  int_0^T omega0 cos^2 Theta(t) dt  over one
// quasicycle T = 2 pi / omega0, by composite Simpson with a doubled-grid
// error estimate. c(t) comes from the closed form (Lorentzian or ideal
// cavity).
GpEstimate gp_exact(const SystemParams& p, const QuadratureSettings& settings = {});

// Same integral with c(t) taken from a numerically solved trajectory that
// covers exactly [0, 2 pi / omega0] (tabulated spectra).
GpEstimate gp_exact(double theta0, const AmplitudeTrajectory& trajectory, double omega0);

// General kinematic mixed-state phase of the eps_plus branch,
//   arg[ sqrt(eps+(0) eps+(T)) <psi(0)|psi(T)> e^{-int <psi|d/dt psi> dt} ],
// from sampled eigenvectors. Gauge continuity along the grid is enforced by
// phase-aligning each eigenvector to its predecessor; the connection is the
// midpoint finite difference of the aligned vectors. The trajectory must
// start pure (eps_minus(0) <= 1e-9) and stay non-degenerate. Result reduced
// to [0, 2 pi).
double gp_kinematic(std::span<const QubitDensityMatrix> rho_trajectory);

// z(x) = x^{-3} [1 - e^{-2 pi x} - 2 pi x (1 - pi x)], the width dependence
// of the lowest-order phase correction. Evaluated by its alternating series
// below x = 1e-2; z(0) = 4 pi^3 / 3 and z(x) -> 2 pi^2 / x for large x.
double z_function(double x);

// First-order weak-coupling phase
//   Phi0 - (W/omega0)^2 sin^2(theta0) (1 + cos(theta0)/2) z(lambda/omega0).
double gp_perturbative(const SystemParams& p);

// Wide-spectrum limit, Phi0 - (pi^2 Gamma0/omega0) sin^2(theta0) (1 + cos(theta0)/2)
// with Gamma0 = 2 W^2 / lambda. Requires lambda > 0.
double gp_markovian_limit(const SystemParams& p);

struct PhaseResult {
    double phi_exact = 0.0;
    double phi_kinematic = 0.0;  // reduced to [0, 2 pi)
    double phi_unitary = 0.0;
    double phi_perturbative = 0.0;
    std::optional<double> phi_markovian;  // absent for the ideal cavity
    double correction = 0.0;              // phi_unitary - phi_exact
    double quadrature_error_estimate = 0.0;
};

// Runs every evaluator at the given resolution. Propagates evaluator
// exceptions; use the sweep layer for per-evaluator failure isolation.
PhaseResult evaluate_phases(const SystemParams& p, const QuadratureSettings& settings = {});

namespace detail {
double z_direct(double x);
double z_series(double x);
}  // namespace detail

}  // namespace qgp
