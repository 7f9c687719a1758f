#ifndef MAGSPEC_KERNEL_HPP
#define MAGSPEC_KERNEL_HPP

#include <Eigen/Core>
#include <complex>
#include <memory>

#include "magspec/grid.hpp"

namespace magspec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// A dense integral kernel K(x_i, x_j) over a grid. As an operator on the
// weighted l2 space it acts by (K psi)(x_i) = sum_j K[i][j] psi(x_j) * weight,
// i.e. the operator matrix is weight * K.
class KernelOperator {
public:
    KernelOperator(std::shared_ptr<const Grid> grid, Matrix entries,
                   bool hermitian);
    KernelOperator(const Grid& grid, Matrix entries, bool hermitian);

    const Grid& grid() const { return *grid_; }
    std::shared_ptr<const Grid> grid_ptr() const { return grid_; }
    const Matrix& entries() const { return entries_; }
    bool hermitian() const { return hermitian_; }
    int size() const { return static_cast<int>(entries_.rows()); }

    // Matrix of the operator on L2(grid measure): weight * entries.
    Matrix op_matrix() const { return grid_->weight() * entries_; }

    // max_ij |K[i][j] - conj(K[j][i])|.
    double asymmetry() const;
    double max_abs() const { return entries_.cwiseAbs().maxCoeff(); }

    static KernelOperator from_op_matrix(std::shared_ptr<const Grid> grid,
                                         const Matrix& op, bool hermitian);

private:
    std::shared_ptr<const Grid> grid_;
    Matrix entries_;
    bool hermitian_;
};

}  // namespace magspec

#endif
