#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qgp/amplitude.hpp"

namespace qgp {

// The two independent components of the 2x2 reduced state: excited
// population and the upper off-diagonal element. The trace is 1 by
// construction.
struct QubitDensityMatrix {
    double p_ee = 0.0;
    std::complex<double> coherence{0.0, 0.0};

    // p(1-p) - |coherence|^2; nonnegative for a physical state.
    double positivity_margin() const noexcept;
};

// rho(t) for the initial state cos(theta0/2)|+> + sin(theta0/2)|->:
//   p_ee = cos^2(theta0/2) |c|^2,   coherence = (sin(theta0)/2) c.
QubitDensityMatrix density_matrix(double theta0, std::complex<double> c);

struct EigenDecomposition {
    double eps_plus = 1.0;   // larger eigenvalue
    double eps_minus = 0.0;  // smaller eigenvalue, eps_plus + eps_minus = 1
    double cos_theta = 0.0;  // cos Theta of the eps_plus eigenvector
    double phase = 0.0;      // arg of the coherence carried by |+>
};

// Spectral decomposition of a qubit state. When the coherence vanishes the
// phase is undefined and fallback_phase is returned instead (pass the
// previous sample's phase when walking a trajectory; 0 at t = 0). When the
// eigenvector numerator and the coherence both vanish, cos Theta = 0 by the
// continuity convention (the eigenvector is |->).
EigenDecomposition eigen_decompose(const QubitDensityMatrix& rho, double fallback_phase = 0.0);

struct PropagationResult {
    std::vector<QubitDensityMatrix> states;  // steps + 1 samples on [0, t_max]
    std::vector<std::string> warnings;       // decay-rate singularities crossed
};

// Integrates
//   rho' = -i Delta(t) [s+s-, rho] + Gamma(t) (2 s- rho s+ - s+s- rho - rho s+s-)
// with the closed-form coefficients by classical fourth-order fixed steps on
// (p_ee, coherence). The trace is preserved exactly by construction. A stage
// evaluated where |c| < 1e-6 attaches a diagnostic warning to the result.
PropagationResult propagate_master_equation(const SystemParams& p, double t_max, int steps);

}  // namespace qgp
