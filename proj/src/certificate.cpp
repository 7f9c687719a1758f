#include "magspec/certificate.hpp"

#include <cmath>
#include <string>

#include "magspec/errors.hpp"
#include "magspec/models.hpp"
#include "magspec/operators.hpp"
#include "magspec/spectral.hpp"

namespace magspec {

KernelOperator gamma(const OperatorFamily& T, const PartitionOfUnity& P) {
    const int n = P.grid().size();
    Matrix acc = Matrix::Zero(n, n);
    for (int k = 0; k < P.n_centers(); ++k) {
        const auto& supp = P.support(k);
        const Matrix& Tk = T[static_cast<size_t>(k)];
        for (int j : supp)
            for (int i : supp) acc(i, j) += Tk(i, j);
    }
    return KernelOperator::from_op_matrix(
        std::make_shared<Grid>(P.grid()), acc, false);
}

Eigen::VectorXd gamma_tilde(const OperatorFamily& T,
                            const PartitionOfUnity& P,
                            const Eigen::VectorXcd& psi) {
    const int n = P.grid().size();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < P.n_centers(); ++k) {
        const auto& supp = P.support(k);
        Eigen::VectorXcd masked = Eigen::VectorXcd::Zero(n);
        for (int i : supp) masked[i] = psi[i];
        const Eigen::VectorXd amp =
            (T[static_cast<size_t>(k)] * masked).cwiseAbs();
        for (int i : supp) out[i] += amp[i];
    }
    return out;
}

Eigen::VectorXd gamma_hat(const KernelOperator& A, const OperatorFamily& T,
                          const PartitionOfUnity& P,
                          const Eigen::VectorXcd& psi) {
    if (A.entries().imag().cwiseAbs().maxCoeff() > 0.0 ||
        A.entries().real().minCoeff() < 0.0)
        throw NumericError(
            "gamma_hat: A must have entrywise-nonnegative real entries");
    const Eigen::MatrixXd Aop = A.op_matrix().real();

    const int n = P.grid().size();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < P.n_centers(); ++k) {
        const auto& supp = P.support(k);
        Eigen::VectorXcd masked = Eigen::VectorXcd::Zero(n);
        for (int i : supp) masked[i] = psi[i];
        const Eigen::VectorXd pushed =
            Aop * (T[static_cast<size_t>(k)] * masked).cwiseAbs();
        for (int i : supp) out[i] += pushed[i];
    }
    return out;
}

namespace {

struct DefectContext {
    Matrix M_H;       // operator matrix of the untwisted H
    Matrix M_Hb;      // operator matrix of H_b
    Matrix M_R;       // (M_H - z)^{-1}
    Spectrum sigma;   // sigma(H)
    double dist_z;
};

DefectContext make_context(const KernelOperator& H, const PhaseFunction& phi,
                           double b, Complex z) {
    DefectContext ctx;
    ctx.sigma = eigvalsh(H);
    ctx.dist_z = spectral_distance(z, ctx.sigma);
    const double norm_H = std::max(std::abs(ctx.sigma.min()),
                                   std::abs(ctx.sigma.max()));
    if (ctx.dist_z <= 1e-6 * norm_H)
        throw NumericError("defect: z too close to sigma(H), distance " +
                           std::to_string(ctx.dist_z));
    ctx.M_H = H.op_matrix();
    ctx.M_Hb = twist(H, phi, b).op_matrix();
    ctx.M_R = resolvent(H, z).op_matrix();
    return ctx;
}

// Per-center scalars used by every assembly: support indices, normalized
// cutoff values, and the phase diagonal e^{i b phi(x_i, c_gamma)}.
struct CenterData {
    const std::vector<int>* supp;
    Eigen::VectorXd g;        // over supp
    Eigen::VectorXcd d;       // over supp
    Point c;
};

CenterData center_data(const PartitionOfUnity& P, const PhaseFunction& phi,
                       double b, int k) {
    CenterData cd;
    cd.supp = &P.support(k);
    cd.c = P.center_point(k);
    const int m = static_cast<int>(cd.supp->size());
    cd.g.resize(m);
    cd.d.resize(m);
    for (int a = 0; a < m; ++a) {
        const int i = (*cd.supp)[static_cast<size_t>(a)];
        cd.g[a] = P.value(k, i);
        const double p = b * phi(P.grid().point(i), cd.c);
        cd.d[a] = Complex(std::cos(p), std::sin(p));
    }
    return cd;
}

Matrix assemble_gamma_T(const DefectContext& ctx, const PartitionOfUnity& P,
                        const PhaseFunction& phi, double b) {
    const int n = P.grid().size();
    Matrix acc = Matrix::Zero(n, n);
    for (int k = 0; k < P.n_centers(); ++k) {
        const CenterData cd = center_data(P, phi, b, k);
        const int m = static_cast<int>(cd.supp->size());
        for (int jb = 0; jb < m; ++jb) {
            const int j = (*cd.supp)[static_cast<size_t>(jb)];
            const Complex right = cd.g[jb] * std::conj(cd.d[jb]);
            for (int ib = 0; ib < m; ++ib) {
                const int i = (*cd.supp)[static_cast<size_t>(ib)];
                acc(i, j) += cd.d[ib] * cd.g[ib] * ctx.M_R(i, j) * right;
            }
        }
    }
    return acc;
}

}  // namespace

DefectReport defect(const KernelOperator& H, const PhaseFunction& phi,
                    double b, Complex z, const PartitionOfUnity& P,
                    double eps) {
    DefectReport report;
    report.b = b;
    report.z = z;

    if (b == 0.0) {
        // H_0 = H and Gamma collapses to sum g^2 R = R: no defect.
        const Spectrum sigma = eigvalsh(H);
        const double dist_z = spectral_distance(z, sigma);
        const double norm_H =
            std::max(std::abs(sigma.min()), std::abs(sigma.max()));
        if (dist_z <= 1e-6 * norm_H)
            throw NumericError("defect: z too close to sigma(H)");
        report.certified = true;
        return report;
    }

    const DefectContext ctx = make_context(H, phi, b, z);
    const int n = H.size();

    const Matrix gammaT = assemble_gamma_T(ctx, P, phi, b);
    const Matrix S = (ctx.M_Hb - z * Matrix::Identity(n, n)) * gammaT -
                     Matrix::Identity(n, n);
    report.norm_S = op_norm_matrix(S);

    const DefectSplit split = defect_split(H, phi, b, z, P);
    report.norm_S1 = op_norm(split.S1);
    report.norm_S2 = op_norm(split.S2);

    report.bound_value =
        std::pow(b, eps / 2.0) * sh_norm(H, eps).value / ctx.dist_z;
    report.certified = report.norm_S < 1.0;
    return report;
}

DefectSplit defect_split(const KernelOperator& H, const PhaseFunction& phi,
                         double b, Complex z, const PartitionOfUnity& P) {
    const int n = H.size();
    auto grid = H.grid_ptr();
    if (b == 0.0) {
        return {KernelOperator::from_op_matrix(grid, Matrix::Zero(n, n), false),
                KernelOperator::from_op_matrix(grid, Matrix::Zero(n, n),
                                               false)};
    }
    const DefectContext ctx = make_context(H, phi, b, z);

    Matrix S1 = Matrix::Zero(n, n);
    Matrix S2 = Matrix::Zero(n, n);
    for (int k = 0; k < P.n_centers(); ++k) {
        const CenterData cd = center_data(P, phi, b, k);
        const int m = static_cast<int>(cd.supp->size());

        // Full phase diagonal and cutoff values over all grid points.
        Eigen::VectorXcd d_full(n);
        Eigen::VectorXd g_full(n);
        for (int i = 0; i < n; ++i) {
            const double p = b * phi(grid->point(i), cd.c);
            d_full[i] = Complex(std::cos(p), std::sin(p));
            g_full[i] = P.value(k, i);
        }

        // W(:, jb) = M_R(:, j) g_j conj(d_j): the common right factor
        // R(z) g_gamma e^{-i b phi(., c_gamma)} restricted to the support
        // columns.
        Matrix W(n, m);
        for (int jb = 0; jb < m; ++jb) {
            const int j = (*cd.supp)[static_cast<size_t>(jb)];
            W.col(jb) = ctx.M_R.col(j) * (cd.g[jb] * std::conj(cd.d[jb]));
        }

        // S1: phase-defect factor (e^{i b fl} - 1) against the kernel of H,
        // columns restricted to the support by the g_gamma(x') factor.
        Matrix B(n, m);
        for (int kb = 0; kb < m; ++kb) {
            const int kk = (*cd.supp)[static_cast<size_t>(kb)];
            const Point& xk = grid->point(kk);
            for (int i = 0; i < n; ++i) {
                const Complex hv = ctx.M_H(i, kk);
                if (hv == Complex(0.0, 0.0)) {
                    B(i, kb) = 0.0;
                    continue;
                }
                const double fl = b * phi.fl(grid->point(i), xk, cd.c);
                B(i, kb) = (Complex(std::cos(fl), std::sin(fl)) - 1.0) * hv *
                           cd.g[kb];
            }
        }
        Matrix Wsup(m, m);
        for (int ib = 0; ib < m; ++ib)
            Wsup.row(ib) = W.row((*cd.supp)[static_cast<size_t>(ib)]);
        Matrix block1 = B * Wsup;  // n x m
        for (int jb = 0; jb < m; ++jb) {
            const int j = (*cd.supp)[static_cast<size_t>(jb)];
            S1.col(j) += d_full.cwiseProduct(block1.col(jb));
        }

        // S2: cutoff commutator H(x,x')(g(x') - g(x)), x' unrestricted.
        // (M_H .* Delta) W = M_H diag(g) W - diag(g) M_H W.
        const Matrix HW = ctx.M_H * W;                          // n x m
        const Matrix HgW = ctx.M_H * g_full.asDiagonal() * W;   // n x m
        Matrix block2 = HgW - g_full.asDiagonal() * HW;
        for (int jb = 0; jb < m; ++jb) {
            const int j = (*cd.supp)[static_cast<size_t>(jb)];
            S2.col(j) += d_full.cwiseProduct(block2.col(jb));
        }
    }
    return {KernelOperator::from_op_matrix(grid, S1, false),
            KernelOperator::from_op_matrix(grid, S2, false)};
}

ResolventCertificate certify_resolvent_point(const KernelOperator& H,
                                             const PhaseFunction& phi,
                                             double b, Complex z,
                                             const PartitionOfUnity& P) {
    const DefectReport report = defect(H, phi, b, z, P);
    return {report.norm_S <= 1.0 - 1e-6, 1.0 - report.norm_S};
}

}  // namespace magspec
