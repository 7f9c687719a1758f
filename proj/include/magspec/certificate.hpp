#ifndef MAGSPEC_CERTIFICATE_HPP
#define MAGSPEC_CERTIFICATE_HPP

#include <vector>

#include "magspec/kernel.hpp"
#include "magspec/partition.hpp"
#include "magspec/phase.hpp"

namespace magspec {

// Per-center operator family {T_gamma}, given as operator matrices on the
// full grid. |||T|||_inf = max_gamma ||T_gamma||.
using OperatorFamily = std::vector<Matrix>;

// Gamma(T) = sum_gamma X_gamma T_gamma X_gamma with X_gamma the 0/1 diagonal
// of the support of g_gamma.
KernelOperator gamma(const OperatorFamily& T, const PartitionOfUnity& P);

// Gamma_tilde(T) psi = sum_gamma X_gamma |T_gamma X_gamma psi| (pointwise
// modulus; nonlinear, positively homogeneous).
Eigen::VectorXd gamma_tilde(const OperatorFamily& T,
                            const PartitionOfUnity& P,
                            const Eigen::VectorXcd& psi);

// Gamma_hat_A(T) psi = sum_gamma X_gamma A |T_gamma X_gamma psi| for an
// entrywise-nonnegative A (discrete positivity-preserving class).
Eigen::VectorXd gamma_hat(const KernelOperator& A, const OperatorFamily& T,
                          const PartitionOfUnity& P,
                          const Eigen::VectorXcd& psi);

struct DefectReport {
    double b = 0.0;
    Complex z;
    double norm_S = 0.0;
    double norm_S1 = 0.0;
    double norm_S2 = 0.0;
    double bound_value = 0.0;  // b^{eps/2} ||H||_{1,eps} / dist(z, sigma(H))
    bool certified = false;    // norm_S < 1
};

// Approximate-resolvent defect S(z) = (H_b - z) Gamma(T(z)) - Id with
// T_gamma(z) = e^{i b phi(.,c_gamma)} g_gamma R(z) g_gamma
//              e^{-i b phi(.,c_gamma)}.
// eps is the model's Hoelder weight exponent (min{alpha, 1}), used only for
// bound_value. b = 0 short-circuits to S = 0.
DefectReport defect(const KernelOperator& H, const PhaseFunction& phi,
                    double b, Complex z, const PartitionOfUnity& P,
                    double eps = 1.0);

// The two pieces of the defect: S1 carries the phase-defect factor
// (e^{i b fl} - 1), S2 the cutoff commutator (g(x') - g(x)). S1 + S2 = S.
struct DefectSplit {
    KernelOperator S1;
    KernelOperator S2;
};
DefectSplit defect_split(const KernelOperator& H, const PhaseFunction& phi,
                         double b, Complex z, const PartitionOfUnity& P);

struct ResolventCertificate {
    bool in_resolvent = false;
    double margin = 0.0;  // 1 - norm_S
};

// ||S(z)|| < 1 implies z is in the resolvent set of H_b.
ResolventCertificate certify_resolvent_point(const KernelOperator& H,
                                             const PhaseFunction& phi,
                                             double b, Complex z,
                                             const PartitionOfUnity& P);

}  // namespace magspec

#endif
