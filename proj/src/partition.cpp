#include "magspec/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "magspec/errors.hpp"

namespace magspec {

double PartitionOfUnity::bump(double r) {
    // Radial C^2 profile: 1 on [0,1/2], 0 on [3/2,inf). The radius-3/2
    // support keeps the support inside a radius-2 ball while giving the
    // 5^dim neighbor bound (centers overlap iff |gamma - gamma'| < 3).
    if (r <= 0.5) return 1.0;
    if (r >= 1.5) return 0.0;
    const double u = r - 0.5;
    return 1.0 - u * u * u * (10.0 - 15.0 * u + 6.0 * u * u);
}

double PartitionOfUnity::min_b(const Grid& grid) {
    const double r = 8.0 / grid.extent();
    return r * r;
}

PartitionOfUnity::PartitionOfUnity(std::shared_ptr<const Grid> grid, double b)
    : grid_(std::move(grid)), b_(b) {
    const double lo = min_b(*grid_);
    if (b < lo || b > 1.0)
        throw ConfigError("partition scale b = " + std::to_string(b) +
                          " outside admissible window [" + std::to_string(lo) +
                          ", 1]");

    const int dim = grid_->dim();
    const int n = grid_->size();
    const double sqrt_b = std::sqrt(b);
    const int gmax = static_cast<int>(
        std::floor(sqrt_b * grid_->extent() / 2.0 + 2.0));

    // Raw translates g(sqrt(b) x - gamma), keeping centers that touch the
    // grid.
    std::vector<Eigen::Vector2i> raw_centers;
    std::vector<Eigen::VectorXd> raw_values;
    const int gy_lo = dim == 2 ? -gmax : 0;
    const int gy_hi = dim == 2 ? gmax : 0;
    for (int gx = -gmax; gx <= gmax; ++gx) {
        for (int gy = gy_lo; gy <= gy_hi; ++gy) {
            Eigen::VectorXd vals(n);
            bool touched = false;
            for (int i = 0; i < n; ++i) {
                const Point y = sqrt_b * grid_->point(i);
                const double r =
                    std::hypot(y[0] - gx, dim == 2 ? y[1] - gy : 0.0);
                vals[i] = bump(r);
                touched = touched || vals[i] > 0.0;
            }
            if (!touched) continue;
            raw_centers.emplace_back(gx, gy);
            raw_values.push_back(std::move(vals));
        }
    }

    const int nc = static_cast<int>(raw_centers.size());
    Eigen::VectorXd sumsq = Eigen::VectorXd::Zero(n);
    for (const auto& vals : raw_values)
        sumsq += vals.cwiseProduct(vals);
    for (int i = 0; i < n; ++i)
        if (sumsq[i] <= 0.0)
            throw NumericError("partition does not cover grid point " +
                               std::to_string(i));

    centers_ = std::move(raw_centers);
    g_.resize(nc, n);
    const Eigen::VectorXd inv_root = sumsq.cwiseSqrt().cwiseInverse();
    for (int k = 0; k < nc; ++k)
        g_.row(k) = raw_values[static_cast<size_t>(k)].cwiseProduct(inv_root)
                        .transpose();

    supports_.resize(static_cast<size_t>(nc));
    std::vector<std::vector<int>> cover(static_cast<size_t>(n));
    for (int k = 0; k < nc; ++k)
        for (int i = 0; i < n; ++i)
            if (g_(k, i) > 0.0) {
                supports_[static_cast<size_t>(k)].push_back(i);
                cover[static_cast<size_t>(i)].push_back(k);
            }

    neighbors_.resize(static_cast<size_t>(nc));
    std::vector<std::vector<bool>> seen(
        static_cast<size_t>(nc), std::vector<bool>(static_cast<size_t>(nc)));
    for (const auto& ks : cover)
        for (int a : ks)
            for (int bk : ks)
                if (!seen[static_cast<size_t>(a)][static_cast<size_t>(bk)]) {
                    seen[static_cast<size_t>(a)][static_cast<size_t>(bk)] =
                        true;
                    neighbors_[static_cast<size_t>(a)].push_back(bk);
                }
}

Point PartitionOfUnity::center_point(int k) const {
    const Eigen::Vector2i& g = centers_[static_cast<size_t>(k)];
    const double inv = 1.0 / std::sqrt(b_);
    return Point(inv * g[0], grid_->dim() == 2 ? inv * g[1] : 0.0);
}

int PartitionOfUnity::max_neighbor_count() const {
    size_t worst = 0;
    for (const auto& nb : neighbors_) worst = std::max(worst, nb.size());
    return static_cast<int>(worst);
}

int PartitionOfUnity::max_cover_count() const {
    std::vector<int> count(static_cast<size_t>(grid_->size()), 0);
    for (const auto& supp : supports_)
        for (int i : supp) ++count[static_cast<size_t>(i)];
    return *std::max_element(count.begin(), count.end());
}

PartitionOfUnity build_partition(std::shared_ptr<const Grid> grid, double b) {
    return PartitionOfUnity(std::move(grid), b);
}

}  // namespace magspec
