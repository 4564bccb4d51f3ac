#include "qgp/amplitude.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qgp/errors.hpp"

namespace qgp {

namespace {

// |Omega t| below this uses the even series in (Omega t)^2; the relative
// truncation error at the threshold is below 1e-18.
constexpr double kConfluentThresholdSq = 1e-8;  // on (Omega t)^2

// cosh(Omega t/2) + (lambda t/2) sinh(Omega t/2)/(Omega t/2) through the
// confluent point, as a function of y = (Omega t)^2 (any sign).
double bracket_series(double lambda, double t, double y) {
    const double ch = 1.0 + y / 8.0 + y * y / 384.0;
    const double shc = 1.0 + y / 24.0 + y * y / 1920.0;
    return ch + 0.5 * lambda * t * shc;
}

}  // namespace

void SystemParams::validate() const {
    if (!(omega0 > 0.0)) throw InvalidInput("omega0 must be positive");
    if (!(W >= 0.0)) throw InvalidInput("coupling W must be nonnegative");
    if (!(lambda >= 0.0)) throw InvalidInput("spectral width lambda must be nonnegative");
    if (!(theta0 >= 0.0 && theta0 <= std::numbers::pi))
        throw InvalidInput("theta0 must lie in [0, pi]");
}

std::complex<double> omega_big(const SystemParams& p) {
    const double disc = p.lambda * p.lambda - 4.0 * p.W * p.W;
    return disc >= 0.0 ? std::complex<double>(std::sqrt(disc), 0.0)
                       : std::complex<double>(0.0, std::sqrt(-disc));
}

double amplitude_envelope(const SystemParams& p, double t) {
    p.validate();
    if (t < 0.0) throw InvalidInput("amplitude is defined for t >= 0");

    const double disc = p.lambda * p.lambda - 4.0 * p.W * p.W;  // Omega^2
    const double y = disc * t * t;                              // (Omega t)^2

    if (std::abs(y) < kConfluentThresholdSq)
        return std::exp(-0.5 * p.lambda * t) * bracket_series(p.lambda, t, y);

    if (disc > 0.0) {
        // Real Omega: all-positive exponential form, stable for any lambda*t.
        const double om = std::sqrt(disc);
        const double r = p.lambda / om;
        const double b = -0.5 * (om + p.lambda) * t;
        if (om * t < 1.0) return 0.5 * std::exp(b) * ((1.0 + r) * std::expm1(om * t) + 2.0);
        const double a = 0.5 * (om - p.lambda) * t;
        return 0.5 * ((1.0 + r) * std::exp(a) + (1.0 - r) * std::exp(b));
    }

    const double w = std::sqrt(-disc);
    const double x = 0.5 * w * t;
    return std::exp(-0.5 * p.lambda * t) * (std::cos(x) + (p.lambda / w) * std::sin(x));
}

std::complex<double> amplitude_analytic(const SystemParams& p, double t) {
    return std::polar(1.0, -p.omega0 * t) * amplitude_envelope(p, t);
}

AmplitudeTrajectory amplitude_trajectory(const SystemParams& p, double t_max, int samples) {
    if (!(t_max > 0.0)) throw InvalidInput("t_max must be positive");
    if (samples < 3) throw InvalidInput("a trajectory needs at least 3 samples");
    AmplitudeTrajectory traj;
    traj.t_max = t_max;
    traj.c.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i)
        traj.c.push_back(amplitude_analytic(p, t_max * i / (samples - 1)));
    return traj;
}

double decay_rate(const SystemParams& p, double t) {
    p.validate();
    if (!(t > 0.0)) throw InvalidInput("decay rate is defined for t > 0 (the t -> 0+ limit is 0)");

    const double disc = p.lambda * p.lambda - 4.0 * p.W * p.W;
    const double y = disc * t * t;
    double bracket;  // lambda + Omega coth(Omega t/2)
    if (std::abs(y) < kConfluentThresholdSq) {
        bracket = p.lambda + (2.0 / t) * (1.0 + y / 12.0 - y * y / 720.0);
    } else if (disc > 0.0) {
        const double om = std::sqrt(disc);
        bracket = p.lambda + om / std::tanh(0.5 * om * t);
    } else {
        const double w = std::sqrt(-disc);
        bracket = p.lambda + w / std::tan(0.5 * w * t);
    }
    // bracket = 0 at the isolated zeros of c(t); the division then yields
    // +-infinity, which is the documented behavior.
    return 2.0 * p.W * p.W / bracket;
}

double lamb_shift(const SystemParams& p, double /*t*/) {
    p.validate();
    return p.omega0;
}

double markovian_decay(const SystemParams& p) {
    p.validate();
    if (!(p.lambda > 0.0)) throw Unsupported("the ideal cavity has no Markovian limit");
    return 2.0 * p.W * p.W / p.lambda;
}

double dissipation_time(const SystemParams& p) {
    const double g0 = markovian_decay(p);
    return g0 > 0.0 ? 1.0 / g0 : std::numeric_limits<double>::infinity();
}

double correlation_time(const SystemParams& p) {
    p.validate();
    if (!(p.lambda > 0.0)) throw Unsupported("correlation time requires lambda > 0");
    return 1.0 / p.lambda;
}

SpectralDensity spectral_density(const SystemParams& p) {
    p.validate();
    if (p.lambda > 0.0) return Lorentzian{p.W, p.lambda, p.omega0};
    return IdealCavity{p.W, p.omega0};
}

}  // namespace qgp
