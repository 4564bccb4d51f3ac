#pragma once

#include <complex>
#include <vector>

namespace qgp {

// Complex survival amplitude c(t) on a uniform grid over [0, t_max].
// c(0) = 1 by construction; |c| <= 1 + 1e-9 for any physical kernel.
struct AmplitudeTrajectory {
    double t_max = 0.0;
    std::vector<std::complex<double>> c;

    std::size_t size() const noexcept { return c.size(); }
    double step() const noexcept { return t_max / static_cast<double>(c.size() - 1); }
    double time_at(std::size_t i) const noexcept {
        return t_max * static_cast<double>(i) / static_cast<double>(c.size() - 1);
    }
};

}  // namespace qgp
