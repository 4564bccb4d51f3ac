#include "qgp/qubit_state.hpp"

#include <cmath>
#include <numbers>

#include "qgp/errors.hpp"

namespace qgp {

double QubitDensityMatrix::positivity_margin() const noexcept {
    return p_ee * (1.0 - p_ee) - std::norm(coherence);
}

QubitDensityMatrix density_matrix(double theta0, std::complex<double> c) {
    if (!(theta0 >= 0.0 && theta0 <= std::numbers::pi))
        throw InvalidInput("theta0 must lie in [0, pi]");
    const double mod2 = std::norm(c);
    if (!(mod2 <= 1.0 + 2e-9))  // |c| <= 1 + 1e-9
        throw InvalidInput("amplitude modulus exceeds 1");
    const double ce = std::cos(0.5 * theta0);
    return {ce * ce * mod2, 0.5 * std::sin(theta0) * c};
}

EigenDecomposition eigen_decompose(const QubitDensityMatrix& rho, double fallback_phase) {
    const double q2 = std::norm(rho.coherence);
    const double b = 2.0 * rho.p_ee - 1.0;
    const double amp = std::sqrt(b * b + 4.0 * q2);

    // Distance p_ee - eps_minus = (b + amp)/2, rewritten through the
    // conjugate root when b < 0 so it vanishes exactly (not to roundoff
    // noise) in the diagonal-degenerate case.
    const double n = b >= 0.0 ? 0.5 * (b + amp) : 2.0 * q2 / (amp - b);
    const double den = n * n + q2;

    EigenDecomposition out;
    out.eps_plus = 0.5 * (1.0 + amp);
    out.eps_minus = 0.5 * (1.0 - amp);
    out.cos_theta = den > 0.0 ? n / std::sqrt(den) : 0.0;
    out.phase = q2 > 0.0 ? std::arg(rho.coherence) : fallback_phase;
    return out;
}

namespace {

struct State {
    double pe;
    std::complex<double> q;
};

State operator+(const State& a, const State& b) { return {a.pe + b.pe, a.q + b.q}; }
State operator*(double s, const State& a) { return {s * a.pe, s * a.q}; }

}  // namespace

PropagationResult propagate_master_equation(const SystemParams& p, double t_max, int steps) {
    p.validate();
    if (!(t_max > 0.0)) throw InvalidInput("t_max must be positive");
    if (steps < 1) throw InvalidInput("steps must be positive");

    const double h = t_max / steps;

    // Gamma(0+) = 0; Delta(t) = omega0. On (p_ee, q) the Lindblad generator
    // is diagonal: p_ee' = -2 Gamma p_ee, q' = -(Gamma + i omega0) q.
    auto rate = [&p](double t) { return t <= 0.0 ? 0.0 : decay_rate(p, t); };
    auto rhs = [&](double t, const State& s) -> State {
        const double g = rate(t);
        return {-2.0 * g * s.pe, -std::complex<double>(g, p.omega0) * s.q};
    };

    PropagationResult result;
    result.states.reserve(static_cast<std::size_t>(steps) + 1);

    const double ce = std::cos(0.5 * p.theta0);
    State y{ce * ce, 0.5 * std::sin(p.theta0)};
    result.states.push_back({y.pe, y.q});

    for (int n = 0; n < steps; ++n) {
        const double t = n * h;
        for (double stage : {t + 0.5 * h, t + h}) {
            if (std::abs(amplitude_envelope(p, stage)) < 1e-6 && result.warnings.size() < 64)
                result.warnings.push_back("decay rate near-singular at t = " +
                                          std::to_string(stage) + " (|c| < 1e-6)");
        }
        const State k1 = rhs(t, y);
        const State k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
        const State k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
        const State k4 = rhs(t + h, y + h * k3);
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        result.states.push_back({y.pe, y.q});
    }
    return result;
}

}  // namespace qgp
