#include "magspec/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "magspec/errors.hpp"

namespace magspec {

Spectrum eigvalsh(const KernelOperator& H) {
    const double scale = H.max_abs();
    const double asym = H.asymmetry();
    if (scale > 0.0 && asym > 1e-10 * scale)
        throw NumericError("eigvalsh: input not Hermitian, asymmetry " +
                           std::to_string(asym));

    Matrix M = H.op_matrix();
    // Fold the residual asymmetry so the solver sees an exactly Hermitian
    // matrix.
    M = 0.5 * (M + Matrix(M.adjoint()));

    Eigen::SelfAdjointEigenSolver<Matrix> solver(M,
                                                 Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericError("eigvalsh: eigensolver failed to converge");

    Spectrum S;
    S.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(S.values.begin(), S.values.end());
    S.source_norm = std::max(std::abs(S.values.front()),
                             std::abs(S.values.back()));
    return S;
}

namespace {

// sup over a in A of dist(a, B); both sorted ascending.
double directed_hausdorff(const std::vector<double>& A,
                          const std::vector<double>& B) {
    double worst = 0.0;
    size_t j = 0;
    for (double a : A) {
        while (j + 1 < B.size() && std::abs(B[j + 1] - a) <= std::abs(B[j] - a))
            ++j;
        worst = std::max(worst, std::abs(B[j] - a));
    }
    return worst;
}

}  // namespace

double hausdorff(const Spectrum& A, const Spectrum& B) {
    if (A.values.empty() || B.values.empty())
        throw NumericError("hausdorff: undefined for empty spectra");
    return std::max(directed_hausdorff(A.values, B.values),
                    directed_hausdorff(B.values, A.values));
}

double spectral_distance(Complex z, const Spectrum& S) {
    if (S.values.empty())
        throw NumericError("spectral_distance: empty spectrum");
    double best = std::abs(z - Complex(S.values.front(), 0.0));
    for (double lam : S.values)
        best = std::min(best, std::abs(z - Complex(lam, 0.0)));
    return best;
}

double op_norm_matrix(const Matrix& op) {
    // Largest singular value via the Hermitian eigenproblem for op* op.
    const Matrix gram = op.adjoint() * op;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(
        0.5 * (gram + Matrix(gram.adjoint())), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericError("op_norm: eigensolver failed to converge");
    const double top = solver.eigenvalues().maxCoeff();
    return top <= 0.0 ? 0.0 : std::sqrt(top);
}

double op_norm(const KernelOperator& T) { return op_norm_matrix(T.op_matrix()); }

}  // namespace magspec
