#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "magspec/errors.hpp"
#include "magspec/spectral.hpp"
#include "test_util.hpp"

using namespace magspec;
using namespace magspec::test;

namespace {

Spectrum spec_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    Spectrum s;
    s.source_norm = std::max(std::abs(v.front()), std::abs(v.back()));
    s.values = std::move(v);
    return s;
}

// quadratic-time reference for the two-pointer sweep
double hausdorff_brute(const Spectrum& A, const Spectrum& B) {
    double h = 0.0;
    for (double a : A.values) {
        double d = 1e300;
        for (double b : B.values) d = std::min(d, std::abs(a - b));
        h = std::max(h, d);
    }
    for (double b : B.values) {
        double d = 1e300;
        for (double a : A.values) d = std::min(d, std::abs(a - b));
        h = std::max(h, d);
    }
    return h;
}

}  // namespace

TEST_CASE("eigvalsh: path-graph Laplacian has the sine spectrum") {
    auto grid = lattice_1d(4);
    Matrix H = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        H(i, i) = 2.0;
        if (i > 0) H(i, i - 1) = -1.0;
        if (i < 3) H(i, i + 1) = -1.0;
    }
    const auto sig = eigvalsh(KernelOperator(grid, H, true));
    for (int k = 1; k <= 4; ++k)
        CHECK(sig.values[static_cast<size_t>(k - 1)] ==
              doctest::Approx(2.0 - 2.0 * std::cos(k * std::numbers::pi / 5.0))
                  .epsilon(1e-10));
}

TEST_CASE("eigvalsh: small closed forms") {
    auto grid = lattice_1d(2);
    Matrix X(2, 2);
    X << 0.0, 1.0, 1.0, 0.0;
    const auto sig = eigvalsh(KernelOperator(grid, X, true));
    CHECK(sig.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sig.values[1] == doctest::Approx(1.0).epsilon(1e-14));

    auto g3 = lattice_1d(3);
    Matrix D = Matrix::Zero(3, 3);
    D(0, 0) = 3.0;
    D(1, 1) = 1.0;
    D(2, 2) = 2.0;
    const auto sd = eigvalsh(KernelOperator(g3, D, true));
    CHECK(sd.values == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("eigvalsh folds in the grid weight") {
    auto grid = std::make_shared<Grid>(1, 1.0, 0.5);  // weight = 1/2
    Matrix H = Matrix::Identity(2, 2) * 4.0;
    const auto sig = eigvalsh(KernelOperator(grid, H, true));
    CHECK(sig.values[0] == doctest::Approx(2.0));
    CHECK(sig.values[1] == doctest::Approx(2.0));
}

TEST_CASE("eigvalsh rejects visibly non-Hermitian input") {
    auto grid = lattice_1d(2);
    Matrix H(2, 2);
    H << 1.0, 5.0, 0.0, 1.0;
    CHECK_THROWS_AS((void)eigvalsh(KernelOperator(grid, H, false)),
                    NumericError);
}

TEST_CASE("hausdorff: hand examples and metric properties") {
    const auto A = spec_of({0.0, 2.0});
    const auto B = spec_of({1.0, 4.0});
    CHECK(hausdorff(A, B) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(hausdorff(A, A) == 0.0);
    CHECK(hausdorff(A, B) == hausdorff(B, A));

    const auto C = spec_of({-3.0, 0.5, 7.0});
    CHECK(hausdorff(A, C) <= hausdorff(A, B) + hausdorff(B, C) + 1e-15);
}

TEST_CASE("hausdorff matches the quadratic oracle on random multisets") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::uniform_int_distribution<int> size(1, 60);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> a(static_cast<size_t>(size(rng)));
        std::vector<double> b(static_cast<size_t>(size(rng)));
        for (double& v : a) v = u(rng);
        for (double& v : b) v = u(rng);
        const auto A = spec_of(a);
        const auto B = spec_of(b);
        CHECK(hausdorff(A, B) == doctest::Approx(hausdorff_brute(A, B))
                                     .epsilon(1e-14));
    }
}

TEST_CASE("spectral_distance uses the complex modulus") {
    const auto S = spec_of({0.0, 6.0});
    CHECK(spectral_distance(Complex(3.0, 4.0), S) ==
          doctest::Approx(5.0).epsilon(1e-15));
    CHECK(spectral_distance(Complex(6.0, 0.0), S) == 0.0);
}

TEST_CASE("op_norm: rank one and unitary cases") {
    auto grid = lattice_1d(3);
    Eigen::VectorXcd u(3), v(3);
    u << Complex(1, 0), Complex(0, 2), Complex(2, 0);
    v << Complex(3, 0), Complex(0, 0), Complex(0, 4);
    const Matrix K = u * v.adjoint();
    CHECK(op_norm(KernelOperator(grid, K, false)) ==
          doctest::Approx(u.norm() * v.norm()).epsilon(1e-12));

    Matrix P = Matrix::Zero(3, 3);  // cyclic permutation
    P(0, 1) = 1.0;
    P(1, 2) = 1.0;
    P(2, 0) = 1.0;
    CHECK(op_norm(KernelOperator(grid, P, false)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Weyl inequality: Hausdorff distance bounded by the norm gap") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> size(2, 40);
    for (int trial = 0; trial < 100; ++trial) {
        auto grid = lattice_1d(size(rng));
        const auto A = random_kernel(grid, rng, true);
        const auto B = random_kernel(grid, rng, true);
        const KernelOperator diff(grid, A.entries() - B.entries(), true);
        CHECK(hausdorff(eigvalsh(A), eigvalsh(B)) <=
              op_norm(diff) + 1e-10);
    }
}
