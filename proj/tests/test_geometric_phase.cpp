#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "qgp/errors.hpp"
#include "qgp/geometric_phase.hpp"

using namespace qgp;
using testutil::kPi;
using testutil::kTwoPi;
using testutil::mod2pi_distance;

namespace {

std::vector<QubitDensityMatrix> closed_form_trajectory(const SystemParams& p, int samples) {
    std::vector<QubitDensityMatrix> rho(samples);
    for (int i = 0; i < samples; ++i)
        rho[i] = density_matrix(p.theta0, amplitude_analytic(p, (kTwoPi / p.omega0) * i / (samples - 1)));
    return rho;
}

bool has_interior_extremum(const std::vector<double>& values) {
    std::vector<int> signs;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double d = values[i] - values[i - 1];
        if (d != 0.0) signs.push_back(d > 0.0 ? 1 : -1);
    }
    for (std::size_t i = 1; i < signs.size(); ++i)
        if (signs[i] != signs[i - 1]) return true;
    return false;
}

}  // namespace

TEST_CASE("unitary phase: solid-angle anchors") {
    CHECK(gp_unitary(0.0) == doctest::Approx(kTwoPi).epsilon(1e-15));
    CHECK(gp_unitary(kPi / 2) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(std::abs(gp_unitary(kPi)) < 1e-15);
    CHECK_THROWS_AS((void)gp_unitary(-0.2), InvalidInput);
    CHECK_THROWS_AS((void)gp_unitary(3.3), InvalidInput);
}

TEST_CASE("exact phase: unitary limit across the polar grid") {
    for (int k = 0; k <= 12; ++k) {
        const double theta = kPi * k / 12;
        const GpEstimate g = gp_exact({1.0, 0.0, 0.7, theta});
        CHECK(std::abs(g.value - gp_unitary(theta)) < 1e-9);
    }
}

TEST_CASE("exact phase: stationary ground state gives zero") {
    const GpEstimate g = gp_exact({1.0, 0.4, 2.0, kPi});
    CHECK(std::abs(g.value) < 1e-12);
}

TEST_CASE("exact phase: frozen moderate-coupling reference") {
    // high-resolution quadrature oracle at 2^16 samples: 4.565198002095185
    const SystemParams p{1.0, 0.2, 5.0, kPi / 3};
    const GpEstimate g = gp_exact(p);
    CHECK(g.value == doctest::Approx(4.565198002095185).epsilon(1e-9));
    CHECK(g.value < 1.5 * kPi);

    // At W = 0.2 the measured gap to the first-order formula is 5.6% of the
    // correction (it scales as W^4), so 6% is the honest frozen bound.
    const double correction = gp_unitary(p.theta0) - g.value;
    CHECK(correction > 0.0);
    CHECK(std::abs(gp_perturbative(p) - g.value) <= 0.06 * correction);
}

TEST_CASE("exact phase: doubled-grid estimate is within the refinement tolerance") {
    for (const SystemParams p : {SystemParams{1.0, 0.2, 5.0, kPi / 3},
                                 SystemParams{1.0, 0.5, 0.05, 1.0},
                                 SystemParams{1.0, 0.8, 0.0, 2.0}}) {
        const QuadratureSettings settings{};
        const GpEstimate g = gp_exact(p, settings);
        CHECK(g.error_estimate <= settings.refinement_tolerance * std::abs(g.value));
    }
}

TEST_CASE("exact phase: bounded on a randomized parameter sample") {
    for (int draw = 0; draw < 64; ++draw) {
        const SystemParams p{1.0, testutil::uniform(0.0, 2.0), testutil::uniform(0.0, 10.0),
                             testutil::uniform(0.0, kPi)};
        const GpEstimate g = gp_exact(p, {1024, 1e-6});
        CHECK(g.value >= 0.0);
        CHECK(g.value <= kTwoPi + 1e-9);
    }
}

TEST_CASE("exact phase from a trajectory matches the closed-form route") {
    const SystemParams p{1.0, 0.3, 2.0, 1.1};
    const auto traj = amplitude_trajectory(p, kTwoPi, 4097);
    const GpEstimate from_traj = gp_exact(p.theta0, traj, 1.0);
    const GpEstimate direct = gp_exact(p);
    CHECK(std::abs(from_traj.value - direct.value) < 1e-9);
    CHECK(from_traj.error_estimate < 1e-8);

    auto even = traj;
    even.c.pop_back();
    CHECK_THROWS_AS((void)gp_exact(p.theta0, even, 1.0), InvalidInput);

    auto wrong_span = traj;
    wrong_span.t_max = 1.0;
    CHECK_THROWS_AS((void)gp_exact(p.theta0, wrong_span, 1.0), InvalidInput);
}

TEST_CASE("kinematic phase: unitary trajectory") {
    const auto rho = closed_form_trajectory({1.0, 0.0, 1.0, kPi / 2}, 4097);
    CHECK(mod2pi_distance(gp_kinematic(rho), kPi) < 1e-6);
}

TEST_CASE("kinematic phase: equals the exact quadrature for weak coupling") {
    const SystemParams p{1.0, 0.1, 5.0, kPi / 3};
    const auto rho = closed_form_trajectory(p, 4097);
    const double kin = gp_kinematic(rho);
    const double exact = gp_exact(p).value;
    CHECK(mod2pi_distance(kin, exact) < 1e-4);
}

TEST_CASE("kinematic phase: ground-state trajectory gives zero") {
    const auto rho = closed_form_trajectory({1.0, 0.4, 2.0, kPi}, 1025);
    CHECK(mod2pi_distance(gp_kinematic(rho), 0.0) < 1e-9);
}

TEST_CASE("kinematic phase: rejects mixed initial states") {
    // eps_minus(0) = 0.2
    std::vector<QubitDensityMatrix> rho(16, QubitDensityMatrix{0.5, {0.3, 0.0}});
    CHECK_THROWS_AS((void)gp_kinematic(rho), Unsupported);
}

TEST_CASE("kinematic phase: rejects an interior degeneracy") {
    std::vector<QubitDensityMatrix> rho{
        density_matrix(0.0, {1.0, 0.0}),  // pure
        QubitDensityMatrix{0.5, {0.0, 0.0}},  // maximally mixed
        density_matrix(0.0, {1.0, 0.0}),
    };
    CHECK_THROWS_AS((void)gp_kinematic(rho), DegenerateTrajectory);
}

TEST_CASE("kinematic phase: needs at least 3 samples") {
    std::vector<QubitDensityMatrix> rho(2, density_matrix(1.0, {1.0, 0.0}));
    CHECK_THROWS_AS((void)gp_kinematic(rho), InvalidInput);
}

TEST_CASE("z: anchors") {
    const double zmax = 4.0 * kPi * kPi * kPi / 3.0;  // 41.3417022403997602
    // z(x) = zmax (1 - (pi/2) x + O(x^2)); the relative deviation from the
    // maximum at x = 1e-6 is therefore (pi/2)e-6, not smaller
    CHECK(std::abs(z_function(1e-6) / zmax - 1.0) < 2e-6);
    CHECK((1.0 - z_function(1e-6) / zmax) ==
          doctest::Approx(0.5 * kPi * 1e-6).epsilon(1e-3));
    CHECK(z_function(0.0) == doctest::Approx(zmax).epsilon(1e-15));
    CHECK(z_function(1.0) == doctest::Approx(14.454156052267423).epsilon(1e-13));
    CHECK(z_function(50.0) == doctest::Approx(0.39227890192070251).epsilon(1e-13));
    // wide-spectrum asymptote 2 pi^2 / x
    CHECK(std::abs(z_function(50.0) * 50.0 / (2.0 * kPi * kPi) - 1.0) < 0.015);
    CHECK_THROWS_AS((void)z_function(-1e-9), InvalidInput);
}

TEST_CASE("z: monotone decreasing on a geometric grid") {
    double prev = z_function(1e-4);
    for (int i = 1; i < 60; ++i) {
        const double x = 1e-4 * std::pow(1e7, i / 59.0);  // spans [1e-4, 1e3]
        const double cur = z_function(x);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("z: series/direct splice continuity at the threshold") {
    const double x = 1e-2;
    CHECK(std::abs(detail::z_series(x) - detail::z_direct(x)) <= 1e-9 * z_function(x));
}

TEST_CASE("perturbative phase: zeroth order and pole angles") {
    CHECK(gp_perturbative({1.0, 0.0, 5.0, 1.0}) == doctest::Approx(gp_unitary(1.0)).epsilon(1e-15));
    CHECK(std::abs(gp_perturbative({1.0, 0.3, 5.0, 0.0}) - gp_unitary(0.0)) < 1e-12);
    CHECK(std::abs(gp_perturbative({1.0, 0.3, 5.0, kPi}) - gp_unitary(kPi)) < 1e-12);
}

TEST_CASE("markovian limit: consistency with the perturbative formula") {
    const SystemParams p{1.0, 0.1, 100.0, kPi / 3};
    const double corr_pert = gp_unitary(p.theta0) - gp_perturbative(p);
    const double corr_markov = gp_unitary(p.theta0) - gp_markovian_limit(p);
    CHECK(std::abs(corr_pert - corr_markov) <= 0.02 * corr_markov);
    CHECK_THROWS_AS((void)gp_markovian_limit({1.0, 0.1, 0.0, 1.0}), Unsupported);
    CHECK(gp_markovian_limit({1.0, 0.0, 5.0, 1.0}) == doctest::Approx(gp_unitary(1.0)).epsilon(1e-15));
}

TEST_CASE("markovian limit: direct substitution point") {
    const SystemParams p{1.0, 0.1, 20.0, kPi / 3};
    const double gamma0 = 2.0 * p.W * p.W / p.lambda;  // 0.001
    const double expected_correction = kPi * kPi * gamma0 * 0.75 * 1.25;  // ~0.00925
    CHECK(gp_unitary(p.theta0) - gp_markovian_limit(p) ==
          doctest::Approx(expected_correction).epsilon(1e-12));
    // cross-check against the exact quadrature within 10% of the correction
    const double exact_correction = gp_unitary(p.theta0) - gp_exact(p).value;
    CHECK(std::abs(exact_correction - expected_correction) <= 0.1 * expected_correction);
}

TEST_CASE("weak-coupling convergence of the exact phase") {
    const double theta = kPi / 3;
    const double prefactor = std::sin(theta) * std::sin(theta) * (1.0 + 0.5 * std::cos(theta));
    for (const double lambda : {0.05, 1.0, 5.0}) {
        const SystemParams p{1.0, 0.02, lambda, theta};
        const double ratio = (gp_unitary(theta) - gp_exact(p).value) / (p.W * p.W);
        const double predicted = prefactor * z_function(lambda);
        CHECK(std::abs(ratio / predicted - 1.0) < 0.05);
    }
}

TEST_CASE("markovian regime: phase decreases with coupling") {
    std::vector<double> phis;
    for (int i = 0; i <= 10; ++i)
        phis.push_back(gp_exact({1.0, 0.05 * i, 5.0, kPi / 3}).value);
    for (std::size_t i = 1; i < phis.size(); ++i) CHECK(phis[i] <= phis[i - 1]);
}

TEST_CASE("non-markovian regime: phase oscillates with coupling") {
    std::vector<double> phis;
    for (int i = 0; i < 200; ++i)
        phis.push_back(gp_exact({1.0, 2.0 * i / 199, 0.05, kPi / 3}, {2048, 1e-6}).value);
    CHECK(has_interior_extremum(phis));
}

TEST_CASE("evaluate_phases: assembled result is coherent") {
    const SystemParams p{1.0, 0.2, 5.0, kPi / 3};
    const PhaseResult r = evaluate_phases(p);
    CHECK(r.phi_unitary == doctest::Approx(1.5 * kPi).epsilon(1e-15));
    CHECK(r.correction == doctest::Approx(r.phi_unitary - r.phi_exact).epsilon(1e-15));
    CHECK(r.phi_markovian.has_value());
    CHECK(mod2pi_distance(r.phi_kinematic, r.phi_exact) < 1e-4);
    CHECK(r.phi_exact >= 0.0);
    CHECK(r.phi_exact <= kTwoPi + 1e-9);

    const PhaseResult cavity = evaluate_phases({1.0, 0.3, 0.0, kPi / 3});
    CHECK(!cavity.phi_markovian.has_value());
}
