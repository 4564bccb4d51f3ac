#pragma once

#include <complex>
#include <functional>
#include <span>

#include "qgp/trajectory.hpp"

namespace qgp {

// Resolution of the phase quadrature. samples_per_period counts the uniform
// grid intervals across one period, so the sampled points are one more than
// that; composite Simpson needs the interval count to be even.
struct QuadratureSettings {
    int samples_per_period = 4096;
    double refinement_tolerance = 1e-8;  // relative doubled-grid check

    void validate() const;
};

// Resolution of the Volterra solver: uniform steps on [0, t_max], fixed
// trapezoidal product-integration scheme.
struct VolterraSettings {
    int steps = 4096;

    void validate() const;
};

// Environmental correlation function of the elapsed time s >= 0.
using CorrelationKernel = std::function<std::complex<double>(double)>;

// Composite Simpson on uniformly sampled values. Needs an odd sample count
// (>= 3); exact for cubics sampled on the grid.
double integrate_uniform(std::span<const double> values, double step);

// Solves  c'(t) + i omega0 c(t) + int_0^t f(t - tau) c(tau) dtau = 0,
// c(0) = 1, on a uniform grid. The history integral uses trapezoid weights
// and the update is implicit in the newest point, solved in closed form;
// the scheme is second order in the step.
AmplitudeTrajectory solve_volterra(const CorrelationKernel& kernel, double omega0,
                                   double t_max, const VolterraSettings& settings = {});

}  // namespace qgp
