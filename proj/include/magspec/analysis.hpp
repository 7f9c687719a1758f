#ifndef MAGSPEC_ANALYSIS_HPP
#define MAGSPEC_ANALYSIS_HPP

#include <string>
#include <vector>

#include "magspec/certificate.hpp"
#include "magspec/models.hpp"

namespace magspec {

enum class SweepQuantity { hausdorff_distance, defect_norm, resolvent_gap, rb_gap };

struct SweepTable {
    std::vector<double> b;      // strictly increasing
    std::vector<double> value;  // nonnegative
    SweepQuantity quantity = SweepQuantity::hausdorff_distance;
    std::string model_hash;
};

struct HolderFit {
    double slope = 0.0;
    double log_constant = 0.0;  // fit is log(value) = slope*log(b) + log_constant
    double r_squared = 0.0;
    double sup_ratio = 0.0;  // max over rows of value / b^beta_ref
    double beta_ref = 0.5;
    bool ratio_stable = false;
};

// Log-spaced b grid clipped to the partition-admissible window
// [(8/L)^2, 1]; density defaults to 6 points per decade.
std::vector<double> default_b_grid(const Grid& grid, double b_min, double b_max,
                                   int points_per_decade = 6);

// d_H(sigma(twist(H, phi, b0 + delta)), sigma(twist(H, phi, b0))) per delta.
SweepTable sweep_hausdorff(const ModelSpec& spec, const PhaseFunction& phi,
                           const std::vector<double>& b_grid, double b0 = 0.0,
                           int workers = 1);

// rows (b, ||S(z)||) from the certificate defect.
SweepTable sweep_defect(const ModelSpec& spec, const PhaseFunction& phi,
                        Complex z, const std::vector<double>& b_grid,
                        int workers = 1);

// Least-squares fit of log(value) vs log(b); rows with value <= 1e-14 are
// dropped. ratio_stable: max ratio over the smallest third of b is at most
// twice the max over the largest third.
HolderFit fit_holder(const SweepTable& table, double beta_ref);

struct Theorem2Tables {
    SweepTable resolvent_gap;  // d_H(sigma(R), sigma(R'))
    SweepTable rb_gap;         // op_norm(R' - R_b)
};

// Per b: H from B0, H' from B0 + b*frak_b (both include a_shift); R = H^{-1},
// R' = H'^{-1}, R_b = twist(R, phi_a, b) with phi_a the line phase of the
// transverse gauge of frak_b.
Theorem2Tables theorem2_compare(const ModelSpec& spec, const MagneticField& B0,
                                const MagneticField& frak_b, double a_shift,
                                const std::vector<double>& b_grid,
                                int workers = 1);

struct Alpha0Row {
    double b = 0.0;
    double M = 0.0;
    double u = 0.0;          // uniformity defect ||H - H_M||_{1,0}
    double dh_truncated = 0.0;  // d_H(sigma((H_b)_M), sigma(H_M))
    double dh_full = 0.0;       // d_H(sigma(H_b), sigma(H))
    bool chain_holds = false;   // dh_full <= 2u + dh_truncated + 1e-8
};

struct Alpha0Report {
    std::vector<Alpha0Row> rows;
    bool all_chains_hold = false;
    bool u_monotone = false;
};

// The alpha = 0 continuity pipeline: triangle chain through the truncated
// operators, for every (b, M) pair.
Alpha0Report alpha0_pipeline(const ModelSpec& spec, const PhaseFunction& phi,
                             const std::vector<double>& b_grid,
                             const std::vector<double>& M_grid,
                             int workers = 1);

// Deterministic worker pool: evaluates job(i) for i in [0, n) on `workers`
// threads; results must be written to index i only.
void parallel_for(int n, int workers, const std::function<void(int)>& job);

}  // namespace magspec

#endif
