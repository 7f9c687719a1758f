#ifndef MAGSPEC_MODELS_HPP
#define MAGSPEC_MODELS_HPP

#include <functional>
#include <memory>

#include "magspec/kernel.hpp"
#include "magspec/phase.hpp"

namespace magspec {

// Magnetic field through its components B_jk(x) (antisymmetric in j,k).
struct MagneticField {
    int dim = 2;
    std::function<double(int, int, const Point&)> component;
    double sup_norm = 0.0;

    static MagneticField zero(int dim);
    // Constant perpendicular field B_12 = strength (2D).
    static MagneticField constant(double strength);
};

using VectorPotential = std::function<Eigen::Vector2d(const Point&)>;

enum class ModelKind { harper, mag_schrodinger, longrange };
enum class DecayType { exponential, power };

struct ModelSpec {
    ModelKind kind = ModelKind::harper;
    std::shared_ptr<const Grid> grid;
    double hopping = 1.0;               // J
    DecayType decay_type = DecayType::exponential;
    double decay_rate = 1.0;            // mu (exponential) or p (power law)
    double potential_lambda = 1.0;
    double potential_sigma = 0.6180339887498949;  // inverse golden mean

    double potential(const Point& x) const;
    double decay(double r) const;
    // Hoelder weight exponent the model certifies:
    // exponential -> 1, power law -> min(1, p - dim - 0.01).
    double alpha_model() const;
};

// Transverse gauge A_j(x) = -sum_k int_0^1 B_jk(sx) s x_k ds, evaluated by
// 64-panel composite Simpson (exact for constant fields).
Eigen::Vector2d transverse_gauge(const MagneticField& B, const Point& x);
VectorPotential transverse_gauge(const MagneticField& B);

// phi(x,x') = -int_x^x' A along the straight segment (64-panel Simpson).
double line_phase(const VectorPotential& A, const Point& x, const Point& xp);
// Packaged as a PhaseFunction with flux_constant = ||B||_inf (the flux
// through the triangle <x,y,x'> is bounded by ||B||_inf |x-y||y-x'|).
PhaseFunction line_phase(const MagneticField& B);

struct HarperModel {
    KernelOperator H;
    PhaseFunction phi;
};

// Hopping kernel H[i][j] = J * decay(|x_i - x_j|) off the diagonal,
// potential on the diagonal; phi from the transverse gauge of B.
HarperModel build_harper(const ModelSpec& spec, const MagneticField& B);
// Same envelope with an explicitly supplied phase (1D fields vanish, so the
// 1D experiments pass a synthetic phase here).
HarperModel build_harper(const ModelSpec& spec, const PhaseFunction& phi);

// Discrete magnetic Schroedinger operator: 5-point Laplacian with Peierls
// link phases from the transverse gauge of B, plus potential and
// a_shift * Id. Fails unless the result is positive definite.
KernelOperator build_mag_schrodinger(const ModelSpec& spec,
                                     const MagneticField& B, double a_shift);
// Variant with a caller-chosen vector potential (gauge covariance tests).
KernelOperator build_mag_schrodinger(const ModelSpec& spec,
                                     const VectorPotential& A, double a_shift,
                                     bool check_positivity = true);

// Dense (H - z)^{-1}; verifies the residual (H - z) R - Id before returning.
KernelOperator resolvent(const KernelOperator& H, Complex z);

}  // namespace magspec

#endif
