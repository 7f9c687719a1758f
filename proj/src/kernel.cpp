#include "magspec/kernel.hpp"

#include <string>

#include "magspec/errors.hpp"

namespace magspec {

KernelOperator::KernelOperator(std::shared_ptr<const Grid> grid,
                               Matrix entries, bool hermitian)
    : grid_(std::move(grid)), entries_(std::move(entries)),
      hermitian_(hermitian) {
    if (entries_.rows() != entries_.cols() ||
        entries_.rows() != grid_->size())
        throw NumericError("kernel matrix must be square with side = grid "
                           "point count");
    if (hermitian_) {
        const double scale = max_abs();
        const double asym = asymmetry();
        if (scale > 0.0 && asym > 1e-12 * scale)
            throw NumericError("kernel flagged hermitian but asymmetry is " +
                               std::to_string(asym));
    }
}

KernelOperator::KernelOperator(const Grid& grid, Matrix entries,
                               bool hermitian)
    : KernelOperator(std::make_shared<Grid>(grid), std::move(entries),
                     hermitian) {}

double KernelOperator::asymmetry() const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

KernelOperator KernelOperator::from_op_matrix(std::shared_ptr<const Grid> grid,
                                              const Matrix& op,
                                              bool hermitian) {
    const double w = grid->weight();
    return KernelOperator(std::move(grid), op / w, hermitian);
}

}  // namespace magspec
