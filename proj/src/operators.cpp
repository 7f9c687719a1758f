#include "magspec/operators.hpp"

#include <cmath>

namespace magspec {

namespace {

double bracket(const Point& d) { return std::sqrt(1.0 + d.squaredNorm()); }

}  // namespace

SHNormResult sh_norm(const KernelOperator& T, double alpha) {
    const Grid& grid = T.grid();
    const int n = T.size();
    const double w = grid.weight();
    const Matrix& K = T.entries();

    SHNormResult res;
    res.alpha = alpha;

    Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd col_sums = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double a = std::abs(K(i, j));
            if (a == 0.0) continue;
            const double wgt =
                alpha == 0.0
                    ? 1.0
                    : std::pow(bracket(grid.point(i) - grid.point(j)), alpha);
            row_sums[i] += a * wgt * w;
            col_sums[j] += a * wgt * w;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (row_sums[i] > res.value) {
            res.value = row_sums[i];
            res.achieved_at = i;
            res.achieved_on_row = true;
        }
        if (col_sums[i] > res.value) {
            res.value = col_sums[i];
            res.achieved_at = i;
            res.achieved_on_row = false;
        }
    }
    return res;
}

KernelOperator truncate(const KernelOperator& T, double M) {
    const Grid& grid = T.grid();
    const int n = T.size();
    Matrix K = T.entries();
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if ((grid.point(i) - grid.point(j)).norm() > M) K(i, j) = 0.0;
    return KernelOperator(T.grid_ptr(), std::move(K), T.hermitian());
}

double uniformity_defect(const KernelOperator& T, double M) {
    const KernelOperator tail(T.grid_ptr(),
                              T.entries() - truncate(T, M).entries(),
                              T.hermitian());
    return sh_norm(tail, 0.0).value;
}

KernelOperator twist(const KernelOperator& T, const PhaseFunction& phi,
                     double b) {
    const Grid& grid = T.grid();
    const int n = T.size();
    Matrix K = T.entries();
    if (b != 0.0) {
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                if (K(i, j) == Complex(0.0, 0.0)) continue;
                const double p = b * phi(grid.point(i), grid.point(j));
                K(i, j) *= Complex(std::cos(p), std::sin(p));
            }
    }
    return KernelOperator(T.grid_ptr(), std::move(K), T.hermitian());
}

KernelOperator twist(const KernelOperator& T, const Eigen::MatrixXd& phase,
                     double b) {
    const int n = T.size();
    Matrix K = T.entries();
    if (b != 0.0) {
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                if (K(i, j) == Complex(0.0, 0.0)) continue;
                const double p = b * phase(i, j);
                K(i, j) *= Complex(std::cos(p), std::sin(p));
            }
    }
    return KernelOperator(T.grid_ptr(), std::move(K), T.hermitian());
}

}  // namespace magspec
