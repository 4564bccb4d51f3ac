#pragma once

#include <complex>

#include "qgp/spectral.hpp"
#include "qgp/trajectory.hpp"

namespace qgp {

// The four physical inputs, all frequencies in the same absolute
// angular-frequency unit. lambda = 0 selects the ideal-cavity branch.
struct SystemParams {
    double omega0 = 1.0;  // transition frequency, > 0
    double W = 0.0;       // environment coupling, >= 0
    double lambda = 0.0;  // spectral width, >= 0
    double theta0 = 0.0;  // initial polar angle, in [0, pi]

    void validate() const;
};

// Omega = sqrt(lambda^2 - 4 W^2), principal branch: real nonnegative for
// lambda >= 2W, positive imaginary otherwise.
std::complex<double> omega_big(const SystemParams& p);

// Real envelope u(t) of the survival amplitude, c(t) = e^{-i omega0 t} u(t);
// u(0) = 1 and |u| <= 1.
double amplitude_envelope(const SystemParams& p, double t);

// Closed-form survival amplitude
//   c(t) = e^{-(lambda/2 + i omega0) t} [cosh(Omega t/2) + (lambda/Omega) sinh(Omega t/2)].
// Near the confluent point lambda = 2W (|Omega t| < 1e-4) the bracket is
// evaluated by its even series in (Omega t)^2.
std::complex<double> amplitude_analytic(const SystemParams& p, double t);

// Samples amplitude_analytic on a uniform grid of `samples` points over
// [0, t_max].
AmplitudeTrajectory amplitude_trajectory(const SystemParams& p, double t_max, int samples);

// Gamma(t) = 2 W^2 / (lambda + Omega coth(Omega t/2)). The limit at t -> 0+
// is 0 but t = 0 itself is rejected. In the strong-coupling oscillatory
// regime the value can be negative and diverges at the isolated zeros of
// c(t); callers that integrate through such zeros must handle that.
double decay_rate(const SystemParams& p, double t);

// Delta(t) = omega0: the Lorentzian frequency shift vanishes identically.
// Returned for every t, including the measure-zero instants where c(t) = 0
// and the defining ratio c'(t)/c(t) is singular.
double lamb_shift(const SystemParams& p, double t);

// Markovian population decay rate Gamma0 = 2 W^2 / lambda (lambda > 0).
double markovian_decay(const SystemParams& p);

// tau_D = 1/Gamma0 = lambda / (2 W^2); +infinity for a decoupled atom.
double dissipation_time(const SystemParams& p);

// tau_c = 1/lambda (lambda > 0).
double correlation_time(const SystemParams& p);

// The spectral density these parameters describe: Lorentzian, or IdealCavity
// when lambda = 0.
SpectralDensity spectral_density(const SystemParams& p);

}  // namespace qgp
