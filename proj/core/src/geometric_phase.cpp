#include "qgp/geometric_phase.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "qgp/errors.hpp"

namespace qgp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_to_2pi(double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

// omega0 cos^2 Theta(t) sampled on n_intervals + 1 points over one period.
template <typename AmplitudeAt>
double phase_quadrature(double theta0, double omega0, double period, int n_intervals,
                        const AmplitudeAt& c_at) {
    const double h = period / n_intervals;
    std::vector<double> values(static_cast<std::size_t>(n_intervals) + 1);
    for (int i = 0; i <= n_intervals; ++i) {
        const auto rho = density_matrix(theta0, c_at(i, h * i));
        const double ct = eigen_decompose(rho).cos_theta;
        values[static_cast<std::size_t>(i)] = omega0 * ct * ct;
    }
    return integrate_uniform(values, h);
}

}  // namespace

double gp_unitary(double theta0) {
    if (!(theta0 >= 0.0 && theta0 <= std::numbers::pi))
        throw InvalidInput("theta0 must lie in [0, pi]");
    return std::numbers::pi * (1.0 + std::cos(theta0));
}

GpEstimate gp_exact(const SystemParams& p, const QuadratureSettings& settings) {
    p.validate();
    settings.validate();
    const double period = kTwoPi / p.omega0;
    auto closed_form = [&p](int /*i*/, double t) { return amplitude_analytic(p, t); };
    const double coarse =
        phase_quadrature(p.theta0, p.omega0, period, settings.samples_per_period, closed_form);
    const double fine =
        phase_quadrature(p.theta0, p.omega0, period, 2 * settings.samples_per_period, closed_form);
    return {fine, std::abs(fine - coarse)};
}

GpEstimate gp_exact(double theta0, const AmplitudeTrajectory& trajectory, double omega0) {
    if (!(omega0 > 0.0)) throw InvalidInput("omega0 must be positive");
    const double period = kTwoPi / omega0;
    if (trajectory.size() < 5 || trajectory.size() % 2 == 0)
        throw InvalidInput("trajectory needs an odd sample count >= 5");
    if (std::abs(trajectory.t_max - period) > 1e-9 * period)
        throw InvalidInput("trajectory must cover exactly one quasicycle [0, 2 pi / omega0]");

    const int n = static_cast<int>(trajectory.size()) - 1;
    auto sampled = [&trajectory](int i, double /*t*/) { return trajectory.c[static_cast<std::size_t>(i)]; };
    const double full = phase_quadrature(theta0, omega0, period, n, sampled);

    double estimate;
    if (n % 4 == 0) {
        auto halved = [&trajectory](int i, double /*t*/) {
            return trajectory.c[static_cast<std::size_t>(2 * i)];
        };
        estimate = std::abs(full - phase_quadrature(theta0, omega0, period, n / 2, halved));
    } else {
        // No coarser Simpson grid exists; fall back to the Simpson/trapezoid gap.
        const double h = period / n;
        double trap = 0.0;
        double prev = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double ct = eigen_decompose(density_matrix(theta0, trajectory.c[i])).cos_theta;
            const double v = omega0 * ct * ct;
            if (i > 0) trap += 0.5 * h * (prev + v);
            prev = v;
        }
        estimate = std::abs(full - trap);
    }
    return {full, estimate};
}

double gp_kinematic(std::span<const QubitDensityMatrix> rho_trajectory) {
    const std::size_t n = rho_trajectory.size();
    if (n < 3) throw InvalidInput("kinematic phase needs at least 3 trajectory samples");

    std::vector<EigenDecomposition> decomp(n);
    decomp[0] = eigen_decompose(rho_trajectory[0]);
    if (decomp[0].eps_minus > 1e-9)
        throw Unsupported("kinematic phase requires a pure initial state (eps_minus(0) <= 1e-9)");
    for (std::size_t i = 1; i < n; ++i) {
        decomp[i] = eigen_decompose(rho_trajectory[i], decomp[i - 1].phase);
        if (i + 1 < n && decomp[i].eps_plus - decomp[i].eps_minus < 1e-12)
            throw DegenerateTrajectory("eigenvalue degeneracy at an interior trajectory sample");
    }

    // Eigenvectors (e^{i phase} cos Theta, sin Theta), phase-aligned to the
    // predecessor so the connection is evaluated in a continuous gauge.
    using Vec2 = std::array<std::complex<double>, 2>;
    auto eigvec = [](const EigenDecomposition& d) -> Vec2 {
        const double st = std::sqrt(std::max(0.0, 1.0 - d.cos_theta * d.cos_theta));
        return {std::polar(d.cos_theta, d.phase), std::complex<double>(st, 0.0)};
    };
    auto inner = [](const Vec2& a, const Vec2& b) {
        return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
    };

    std::vector<Vec2> v(n);
    v[0] = eigvec(decomp[0]);
    for (std::size_t i = 1; i < n; ++i) {
        Vec2 raw = eigvec(decomp[i]);
        const std::complex<double> ov = inner(v[i - 1], raw);
        if (const double m = std::abs(ov); m > 0.0) {
            const std::complex<double> align = std::conj(ov) / m;
            raw[0] *= align;
            raw[1] *= align;
        }
        v[i] = raw;
    }

    // Midpoint finite-difference connection int <psi|d/dt psi> dt.
    std::complex<double> connection{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Vec2 mid{0.5 * (v[i][0] + v[i + 1][0]), 0.5 * (v[i][1] + v[i + 1][1])};
        const Vec2 diff{v[i + 1][0] - v[i][0], v[i + 1][1] - v[i][1]};
        connection += inner(mid, diff);
    }

    const double weight = std::sqrt(decomp.front().eps_plus * decomp.back().eps_plus);
    const std::complex<double> overlap = inner(v.front(), v.back());
    const std::complex<double> holonomy = weight * overlap * std::exp(-connection);
    return reduce_to_2pi(std::arg(holonomy));
}

namespace detail {

double z_direct(double x) {
    const double head = -std::expm1(-kTwoPi * x);  // 1 - e^{-2 pi x}
    return (head - kTwoPi * x * (1.0 - std::numbers::pi * x)) / (x * x * x);
}

double z_series(double x) {
    // z(x) = sum_{n>=3} (-1)^{n+1} (2 pi)^n x^{n-3} / n!, truncated at n = 14;
    // for x < 1e-2 the truncation error is far below double precision.
    double term = kTwoPi * kTwoPi * kTwoPi / 6.0;  // n = 3
    double sum = 0.0;
    for (int n = 3; n <= 14; ++n) {
        sum += (n % 2 == 1) ? term : -term;
        term *= kTwoPi * x / (n + 1);
    }
    return sum;
}

}  // namespace detail

double z_function(double x) {
    if (x < 0.0) throw InvalidInput("z is defined for x >= 0");
    return x < 1e-2 ? detail::z_series(x) : detail::z_direct(x);
}

double gp_perturbative(const SystemParams& p) {
    p.validate();
    const double s = std::sin(p.theta0);
    const double ratio = p.W / p.omega0;
    return gp_unitary(p.theta0) -
           ratio * ratio * s * s * (1.0 + 0.5 * std::cos(p.theta0)) * z_function(p.lambda / p.omega0);
}

double gp_markovian_limit(const SystemParams& p) {
    const double gamma0 = markovian_decay(p);  // rejects lambda = 0
    const double s = std::sin(p.theta0);
    return gp_unitary(p.theta0) - std::numbers::pi * std::numbers::pi * (gamma0 / p.omega0) * s * s *
                                      (1.0 + 0.5 * std::cos(p.theta0));
}

PhaseResult evaluate_phases(const SystemParams& p, const QuadratureSettings& settings) {
    p.validate();
    settings.validate();

    PhaseResult out;
    out.phi_unitary = gp_unitary(p.theta0);
    const GpEstimate exact = gp_exact(p, settings);
    out.phi_exact = exact.value;
    out.quadrature_error_estimate = exact.error_estimate;
    out.correction = out.phi_unitary - out.phi_exact;
    out.phi_perturbative = gp_perturbative(p);
    if (p.lambda > 0.0) out.phi_markovian = gp_markovian_limit(p);

    const double period = kTwoPi / p.omega0;
    const int n = settings.samples_per_period;
    std::vector<QubitDensityMatrix> rho(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        rho[static_cast<std::size_t>(i)] =
            density_matrix(p.theta0, amplitude_analytic(p, period * i / n));
    out.phi_kinematic = gp_kinematic(rho);
    return out;
}

}  // namespace qgp
