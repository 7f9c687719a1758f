#ifndef MAGSPEC_SPECTRAL_HPP
#define MAGSPEC_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "magspec/kernel.hpp"

namespace magspec {

// Sorted eigenvalue multiset of a Hermitian operator.
struct Spectrum {
    std::vector<double> values;  // nondecreasing
    double source_norm = 0.0;    // ||H|| for tolerance scaling

    double min() const { return values.front(); }
    double max() const { return values.back(); }
    int size() const { return static_cast<int>(values.size()); }
};

// Dense Hermitian eigensolve of the operator matrix (weight included).
// Rejects inputs whose asymmetry exceeds the Hermitian tolerance.
Spectrum eigvalsh(const KernelOperator& H);

// Hausdorff distance between sorted spectra, two-pointer O(|A| + |B|).
double hausdorff(const Spectrum& A, const Spectrum& B);

// min over lambda in S of |z - lambda|.
double spectral_distance(Complex z, const Spectrum& S);

// Largest singular value of the operator matrix (eigvalsh of T*T).
double op_norm(const KernelOperator& T);
double op_norm_matrix(const Matrix& op);

}  // namespace magspec

#endif
