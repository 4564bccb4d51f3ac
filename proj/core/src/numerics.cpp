#include "qgp/numerics.hpp"

#include <cmath>
#include <vector>

#include "qgp/errors.hpp"

namespace qgp {

void QuadratureSettings::validate() const {
    if (samples_per_period < 16 || samples_per_period % 2 != 0)
        throw InvalidInput("samples_per_period must be even and >= 16");
    if (!(refinement_tolerance > 0.0))
        throw InvalidInput("refinement_tolerance must be positive");
}

void VolterraSettings::validate() const {
    if (steps < 64) throw InvalidInput("Volterra steps must be >= 64");
}

double integrate_uniform(std::span<const double> values, double step) {
    const std::size_t n = values.size();
    if (n < 3) throw InvalidInput("integrate_uniform needs at least 3 samples");
    if (n % 2 == 0) throw InvalidInput("integrate_uniform needs an odd sample count");
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t i = 1; i + 1 < n; i += 2) odd += values[i];
    for (std::size_t i = 2; i + 1 < n; i += 2) even += values[i];
    return (step / 3.0) * (values.front() + values.back() + 4.0 * odd + 2.0 * even);
}

AmplitudeTrajectory solve_volterra(const CorrelationKernel& kernel, double omega0,
                                   double t_max, const VolterraSettings& settings) {
    settings.validate();
    if (!(t_max > 0.0)) throw InvalidInput("t_max must be positive");

    const int n_steps = settings.steps;
    const double h = t_max / n_steps;

    // The kernel enters only through its values at the lag multiples k*h.
    std::vector<std::complex<double>> f(n_steps + 1);
    for (int k = 0; k <= n_steps; ++k) {
        f[k] = kernel(k * h);
        if (!std::isfinite(f[k].real()) || !std::isfinite(f[k].imag()))
            throw NumericalDomainError("correlation kernel is not finite", k * h);
    }

    AmplitudeTrajectory traj;
    traj.t_max = t_max;
    traj.c.assign(n_steps + 1, {0.0, 0.0});
    traj.c[0] = 1.0;

    // hist[n] = trapezoidal value of int_0^{t_n} f(t_n - tau) c(tau) dtau.
    std::vector<std::complex<double>> hist(n_steps + 1, {0.0, 0.0});
    const std::complex<double> denom =
        1.0 + std::complex<double>(0.0, 0.5 * h * omega0) + 0.25 * h * h * f[0];

    for (int n = 0; n < n_steps; ++n) {
        std::complex<double> acc = 0.5 * f[n + 1];  // j = 0 term, c(0) = 1
        const std::complex<double>* fr = f.data() + n;
        const std::complex<double>* cj = traj.c.data() + 1;
        for (int j = 1; j <= n; ++j) acc += *fr-- * *cj++;
        const std::complex<double> known = h * acc;

        const std::complex<double> rhs =
            traj.c[n] -
            0.5 * h * (std::complex<double>(0.0, omega0) * traj.c[n] + hist[n] + known);
        traj.c[n + 1] = rhs / denom;
        hist[n + 1] = known + 0.5 * h * f[0] * traj.c[n + 1];
    }
    return traj;
}

}  // namespace qgp
