#ifndef MAGSPEC_OPERATORS_HPP
#define MAGSPEC_OPERATORS_HPP

#include "magspec/kernel.hpp"
#include "magspec/phase.hpp"

namespace magspec {

struct SHNormResult {
    double value = 0.0;
    double alpha = 0.0;
    int achieved_at = -1;  // row or column index attaining the max
    bool achieved_on_row = false;
};

// Weighted Schur-Holmgren norm: max over rows/columns of
// sum |K[i][j]| <x_i - x_j>^alpha * weight, with <x> = sqrt(1 + |x|^2).
// Dominates the L2 operator norm at alpha = 0 (Schur test).
SHNormResult sh_norm(const KernelOperator& T, double alpha);

// Diagonal truncation: keeps entries with |x_i - x_j| <= M.
KernelOperator truncate(const KernelOperator& T, double M);

// ||T - T_M||_{1,0}: how far T is from being band-limited at width M.
double uniformity_defect(const KernelOperator& T, double M);

// Entrywise multiplication by the unimodular phase e^{i b phi(x_i, x_j)}.
KernelOperator twist(const KernelOperator& T, const PhaseFunction& phi,
                     double b);
// Same with a pretabulated antisymmetric phase matrix phase(i,j) =
// phi(x_i, x_j).
KernelOperator twist(const KernelOperator& T, const Eigen::MatrixXd& phase,
                     double b);

}  // namespace magspec

#endif
