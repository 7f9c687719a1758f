#ifndef MAGSPEC_PHASE_HPP
#define MAGSPEC_PHASE_HPP

#include <cstdint>
#include <functional>

#include "magspec/grid.hpp"

namespace magspec {

// Antisymmetric two-point phase phi(x, x') with a flux constant c bounding
// the three-point defect fl(x, y, x') = phi(x,y) + phi(y,x') - phi(x,x'):
//   |fl(x, y, x')| <= c |x - y| |y - x'|.
struct PhaseFunction {
    std::function<double(const Point&, const Point&)> eval;
    double flux_constant = 0.0;

    double operator()(const Point& x, const Point& xp) const {
        return eval(x, xp);
    }
    double fl(const Point& x, const Point& y, const Point& xp) const {
        return eval(x, y) + eval(y, xp) - eval(x, xp);
    }

    static PhaseFunction zero();
    // 2D symmetric-gauge phase of a constant field B12 = b:
    // phi(x,x') = -(b/2)(x1 x2' - x2 x1'), flux constant |b|.
    static PhaseFunction symmetric_gauge(double b);
    // 1D synthetic phase phi(x,x') = amp * sin(x1 - x1'), flux constant
    // 2|amp| (|sin u + sin v - sin(u+v)| <= 2|u||v|).
    static PhaseFunction sine(double amp);
    // 1D synthetic phase phi(x,x') = amp * d|d| with d = x1 - x1'. Same
    // flux constant 2|amp| (|a|a + |b|b - |a+b|(a+b) is bounded by 2|a||b|),
    // but fl grows like |x-y||y-x'| instead of saturating, so it drives the
    // defect at the b^{1/2} envelope the way a genuine magnetic flux does.
    static PhaseFunction quadratic(double amp);
};

struct PhaseReport {
    double max_antisymmetry_violation = 0.0;
    double max_flux_ratio = 0.0;
    bool pass = false;
};

// Samples n_triples seeded pseudo-random triples from the grid and measures
// the worst antisymmetry violation and |fl| / (|x-y||y-x'|) ratio.
PhaseReport validate_phase(const PhaseFunction& phi, const Grid& grid,
                           int n_triples, std::uint64_t seed = 0x5eed);

}  // namespace magspec

#endif
