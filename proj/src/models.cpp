#include "magspec/models.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <string>

#include "magspec/errors.hpp"
#include "magspec/operators.hpp"
#include "magspec/spectral.hpp"

namespace magspec {

namespace {

constexpr int kSimpsonPanels = 64;

// Composite Simpson on [0,1].
template <typename F>
double simpson01(F&& f) {
    const int nodes = 2 * kSimpsonPanels;
    const double dt = 1.0 / nodes;
    double acc = f(0.0) + f(1.0);
    for (int k = 1; k < nodes; ++k) acc += (k % 2 ? 4.0 : 2.0) * f(k * dt);
    return acc * dt / 3.0;
}

}  // namespace

MagneticField MagneticField::zero(int dim) {
    return {dim, [](int, int, const Point&) { return 0.0; }, 0.0};
}

MagneticField MagneticField::constant(double strength) {
    return {2,
            [strength](int j, int k, const Point&) {
                if (j == 0 && k == 1) return strength;
                if (j == 1 && k == 0) return -strength;
                return 0.0;
            },
            std::abs(strength)};
}

double ModelSpec::potential(const Point& x) const {
    return 2.0 * potential_lambda *
           std::cos(2.0 * std::numbers::pi * potential_sigma * x[0]);
}

double ModelSpec::decay(double r) const {
    if (decay_type == DecayType::exponential) return std::exp(-decay_rate * r);
    return std::pow(1.0 + r * r, -decay_rate / 2.0);
}

double ModelSpec::alpha_model() const {
    if (decay_type == DecayType::exponential) return 1.0;
    return std::min(1.0, decay_rate - grid->dim() - 0.01);
}

Eigen::Vector2d transverse_gauge(const MagneticField& B, const Point& x) {
    Eigen::Vector2d A = Eigen::Vector2d::Zero();
    for (int j = 0; j < B.dim; ++j) {
        double acc = 0.0;
        for (int k = 0; k < B.dim; ++k) {
            if (k == j) continue;
            acc += simpson01(
                [&](double s) { return B.component(j, k, s * x) * s * x[k]; });
        }
        A[j] = -acc;
    }
    return A;
}

VectorPotential transverse_gauge(const MagneticField& B) {
    return [B](const Point& x) { return transverse_gauge(B, x); };
}

double line_phase(const VectorPotential& A, const Point& x, const Point& xp) {
    const Eigen::Vector2d d = xp - x;
    if (d.squaredNorm() == 0.0) return 0.0;
    return -simpson01([&](double t) { return A(x + t * d).dot(d); });
}

PhaseFunction line_phase(const MagneticField& B) {
    VectorPotential A = transverse_gauge(B);
    return {[A](const Point& x, const Point& xp) {
                return line_phase(A, x, xp);
            },
            B.sup_norm};
}

HarperModel build_harper(const ModelSpec& spec, const PhaseFunction& phi) {
    if (spec.kind == ModelKind::mag_schrodinger)
        throw ConfigError("build_harper: kind must be harper or longrange");
    const Grid& grid = *spec.grid;
    if (spec.decay_type == DecayType::power &&
        spec.decay_rate <= grid.dim())
        throw ConfigError(
            "build_harper: power-law exponent p must exceed dim, got p = " +
            std::to_string(spec.decay_rate));

    const int n = grid.size();
    Matrix K(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (i == j) {
                K(i, j) = spec.potential(grid.point(i));
            } else {
                const double r = (grid.point(i) - grid.point(j)).norm();
                K(i, j) = spec.hopping * spec.decay(r);
            }
        }
    }
    return {KernelOperator(spec.grid, std::move(K), true), phi};
}

HarperModel build_harper(const ModelSpec& spec, const MagneticField& B) {
    return build_harper(spec, line_phase(B));
}

KernelOperator build_mag_schrodinger(const ModelSpec& spec,
                                     const VectorPotential& A, double a_shift,
                                     bool check_positivity) {
    const Grid& grid = *spec.grid;
    if (grid.dim() != 2)
        throw ConfigError("build_mag_schrodinger: dim must be 2");
    const int n = grid.size();
    const int na = grid.points_per_axis();
    const double h2 = grid.spacing() * grid.spacing();

    Matrix K = Matrix::Zero(n, n);
    for (int ix = 0; ix < na; ++ix) {
        for (int iy = 0; iy < na; ++iy) {
            const int i = grid.index(ix, iy);
            K(i, i) = 4.0 / h2 + spec.potential(grid.point(i)) + a_shift;
            // Peierls link phase on each nearest-neighbor bond.
            const auto bond = [&](int jx, int jy) {
                const int j = grid.index(jx, jy);
                const double p =
                    line_phase(A, grid.point(i), grid.point(j));
                K(i, j) = -std::polar(1.0 / h2, p);
            };
            if (ix + 1 < na) bond(ix + 1, iy);
            if (ix > 0) bond(ix - 1, iy);
            if (iy + 1 < na) bond(ix, iy + 1);
            if (iy > 0) bond(ix, iy - 1);
        }
    }
    KernelOperator H(spec.grid, std::move(K), true);
    if (check_positivity) {
        const Spectrum S = eigvalsh(H);
        if (S.min() <= 0.0)
            throw NumericError(
                "build_mag_schrodinger: not positive definite, smallest "
                "eigenvalue " +
                std::to_string(S.min()) + " (a_shift too small)");
    }
    return H;
}

KernelOperator build_mag_schrodinger(const ModelSpec& spec,
                                     const MagneticField& B, double a_shift) {
    return build_mag_schrodinger(spec, transverse_gauge(B), a_shift, true);
}

KernelOperator resolvent(const KernelOperator& H, Complex z) {
    const int n = H.size();
    const Matrix M = H.op_matrix();
    const Matrix shifted = M - z * Matrix::Identity(n, n);
    Eigen::PartialPivLU<Matrix> lu(shifted);
    Matrix R = lu.inverse();
    const double residual =
        (shifted * R - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (!(residual <= 1e-9))  // NaN residual must also reject
        throw NumericError("resolvent: near-singular solve, residual " +
                           std::to_string(residual));
    const bool herm = H.hermitian() && z.imag() == 0.0;
    if (herm) R = 0.5 * (R + Matrix(R.adjoint()));  // drop LU roundoff skew
    return KernelOperator::from_op_matrix(H.grid_ptr(), R, herm);
}

}  // namespace magspec
