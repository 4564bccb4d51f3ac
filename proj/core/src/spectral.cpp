#include "qgp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qgp/errors.hpp"

namespace qgp {

namespace {

void validate_tabulated(const Tabulated& t) {
    if (t.omega.size() != t.J.size())
        throw InvalidInput("tabulated density: frequency and J columns differ in length");
    if (t.omega.size() < 2) throw InvalidInput("tabulated density needs at least 2 rows");
    for (std::size_t i = 0; i < t.omega.size(); ++i) {
        if (!std::isfinite(t.omega[i]) || !std::isfinite(t.J[i]))
            throw InvalidInput("tabulated density contains a non-finite entry");
        if (t.J[i] < 0.0) throw InvalidInput("tabulated density has a negative J value");
        if (i > 0 && !(t.omega[i] > t.omega[i - 1]))
            throw InvalidInput("tabulated frequency grid must be strictly increasing");
    }
}

}  // namespace

void validate(const SpectralDensity& sd) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Lorentzian>) {
                if (!(v.W >= 0.0)) throw InvalidInput("Lorentzian coupling W must be >= 0");
                if (!(v.lambda > 0.0)) throw InvalidInput("Lorentzian width lambda must be > 0");
            } else if constexpr (std::is_same_v<T, IdealCavity>) {
                if (!(v.W >= 0.0)) throw InvalidInput("ideal-cavity coupling W must be >= 0");
            } else {
                validate_tabulated(v);
            }
        },
        sd);
}

double evaluate_J(const SpectralDensity& sd, double omega) {
    validate(sd);
    return std::visit(
        [omega](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Lorentzian>) {
                const double d = v.omega0 - omega;
                return v.W * v.W * v.lambda / (std::numbers::pi * (d * d + v.lambda * v.lambda));
            } else if constexpr (std::is_same_v<T, IdealCavity>) {
                throw Unsupported("ideal cavity is a delta distribution; J is not pointwise evaluable");
            } else {
                if (omega <= v.omega.front() || omega >= v.omega.back()) {
                    // exactly on an end node still counts as inside
                    if (omega == v.omega.front()) return v.J.front();
                    if (omega == v.omega.back()) return v.J.back();
                    return 0.0;
                }
                const auto it = std::upper_bound(v.omega.begin(), v.omega.end(), omega);
                const std::size_t i = static_cast<std::size_t>(it - v.omega.begin()) - 1;
                const double w = (omega - v.omega[i]) / (v.omega[i + 1] - v.omega[i]);
                return (1.0 - w) * v.J[i] + w * v.J[i + 1];
            }
        },
        sd);
}

CorrelationKernel correlation_kernel(const SpectralDensity& sd) {
    validate(sd);
    return std::visit(
        [](const auto& v) -> CorrelationKernel {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Lorentzian>) {
                return [v](double s) {
                    return v.W * v.W * std::exp(std::complex<double>(-v.lambda * s, -v.omega0 * s));
                };
            } else if constexpr (std::is_same_v<T, IdealCavity>) {
                return [v](double s) {
                    return v.W * v.W * std::exp(std::complex<double>(0.0, -v.omega0 * s));
                };
            } else {
                // Trapezoid over the tabulated support, non-uniform grid.
                return [grid = v.omega, J = v.J](double s) {
                    std::complex<double> acc{0.0, 0.0};
                    std::complex<double> prev = J[0] * std::exp(std::complex<double>(0.0, -grid[0] * s));
                    for (std::size_t i = 1; i < grid.size(); ++i) {
                        const std::complex<double> cur =
                            J[i] * std::exp(std::complex<double>(0.0, -grid[i] * s));
                        acc += 0.5 * (grid[i] - grid[i - 1]) * (prev + cur);
                        prev = cur;
                    }
                    return acc;
                };
            }
        },
        sd);
}

double correlation_time(const SpectralDensity& sd) {
    if (const auto* l = std::get_if<Lorentzian>(&sd)) {
        validate(sd);
        return 1.0 / l->lambda;
    }
    throw Unsupported("correlation time is defined for the Lorentzian density only");
}

Tabulated load_tabulated(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open spectral density file: " + file.string());

    Tabulated out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        double omega = 0.0;
        double j = 0.0;
        if (!(row >> omega)) continue;  // blank or comment-only line
        if (!(row >> j)) throw ConfigError("expected two columns (frequency, J)", lineno);
        std::string extra;
        if (row >> extra) throw ConfigError("unexpected trailing content '" + extra + "'", lineno);
        out.omega.push_back(omega);
        out.J.push_back(j);
    }
    try {
        validate_tabulated(out);
    } catch (const InvalidInput& e) {
        throw ConfigError(std::string(e.what()) + " in " + file.string());
    }
    return out;
}

}  // namespace qgp
