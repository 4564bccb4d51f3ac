#pragma once

#include <filesystem>
#include <variant>
#include <vector>

#include "qgp/numerics.hpp"

namespace qgp {

// J(omega) = (1/pi) W^2 lambda / ((omega0 - omega)^2 + lambda^2): vacuum
// radiation field confined in a leaky cavity, width lambda around the
// resonance omega0, coupling W.
struct Lorentzian {
    double W;
    double lambda;
    double omega0;
};

// lambda -> 0 limit of the Lorentzian: J collapses to W^2 delta(omega - omega0)
// and the model reduces to Jaynes-Cummings with vacuum Rabi frequency W.
// Kept as its own variant because the delta weight is not pointwise evaluable.
struct IdealCavity {
    double W;
    double omega0;
};

// Sampled density on a strictly increasing frequency grid; J is linearly
// interpolated inside the grid and zero outside.
struct Tabulated {
    std::vector<double> omega;
    std::vector<double> J;
};

using SpectralDensity = std::variant<Lorentzian, IdealCavity, Tabulated>;

void validate(const SpectralDensity& sd);

// Pointwise spectral weight. The ideal cavity is not evaluable.
double evaluate_J(const SpectralDensity& sd, double omega);

// Correlation function f(s) = int J(omega) e^{-i omega s} domega.
//
// Convention note: for the Lorentzian this is W^2 e^{-(lambda + i omega0) s}.
// The often-quoted W^2 e^{-lambda s} form is the rotating-frame modulus; the
// lab-frame kernel used by the amplitude equation carries the resonant phase
// factor e^{-i omega0 s}.
//
// Tabulated densities are transformed by trapezoidal quadrature over their
// support; supply a grid wide enough that the tail weight is negligible
// (the truncation is not checked here).
CorrelationKernel correlation_kernel(const SpectralDensity& sd);

// tau_c = 1/lambda. Lorentzian only.
double correlation_time(const SpectralDensity& sd);

// Reads a two-column text file (frequency, J); '#' starts a comment, blank
// lines are skipped. Frequencies are in whatever unit the caller works in
// (the CLI uses ratios to omega0).
Tabulated load_tabulated(const std::filesystem::path& file);

}  // namespace qgp
