#include "magspec/phase.hpp"

#include <cmath>
#include <random>

namespace magspec {

PhaseFunction PhaseFunction::zero() {
    return {[](const Point&, const Point&) { return 0.0; }, 0.0};
}

PhaseFunction PhaseFunction::symmetric_gauge(double b) {
    return {[b](const Point& x, const Point& xp) {
                return -0.5 * b * (x[0] * xp[1] - x[1] * xp[0]);
            },
            std::abs(b)};
}

PhaseFunction PhaseFunction::sine(double amp) {
    return {[amp](const Point& x, const Point& xp) {
                return amp * std::sin(x[0] - xp[0]);
            },
            2.0 * std::abs(amp)};
}

PhaseFunction PhaseFunction::quadratic(double amp) {
    return {[amp](const Point& x, const Point& xp) {
                const double d = x[0] - xp[0];
                return amp * d * std::abs(d);
            },
            2.0 * std::abs(amp)};
}

PhaseReport validate_phase(const PhaseFunction& phi, const Grid& grid,
                           int n_triples, std::uint64_t seed) {
    PhaseReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, grid.size() - 1);

    for (int t = 0; t < n_triples; ++t) {
        const Point& x = grid.point(pick(rng));
        const Point& y = grid.point(pick(rng));
        const Point& xp = grid.point(pick(rng));

        report.max_antisymmetry_violation =
            std::max(report.max_antisymmetry_violation,
                     std::abs(phi(x, y) + phi(y, x)));

        const double denom = (x - y).norm() * (y - xp).norm();
        if (denom == 0.0) continue;  // fl vanishes there by antisymmetry
        report.max_flux_ratio =
            std::max(report.max_flux_ratio, std::abs(phi.fl(x, y, xp)) / denom);
    }
    report.pass = report.max_flux_ratio <= phi.flux_constant + 1e-10;
    return report;
}

}  // namespace magspec
