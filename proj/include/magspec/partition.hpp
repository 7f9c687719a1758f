#ifndef MAGSPEC_PARTITION_HPP
#define MAGSPEC_PARTITION_HPP

#include <Eigen/Core>
#include <memory>
#include <vector>

#include "magspec/grid.hpp"

namespace magspec {

// Quadratic partition of unity at scale b^{-1/2}: translates of a radial
// bump g on the scaled integer lattice, normalized pointwise so that
// sum_gamma g_gamma^2(x) = 1 at every grid point.
class PartitionOfUnity {
public:
    PartitionOfUnity(std::shared_ptr<const Grid> grid, double b);

    double b() const { return b_; }
    const Grid& grid() const { return *grid_; }
    int n_centers() const { return static_cast<int>(centers_.size()); }
    // gamma in Z^dim.
    const Eigen::Vector2i& center(int k) const {
        return centers_[static_cast<size_t>(k)];
    }
    // b^{-1/2} gamma in original coordinates.
    Point center_point(int k) const;
    // Normalized value of g_gamma at grid point i.
    double value(int k, int i) const { return g_(k, i); }
    // Grid indices where g_gamma > 0.
    const std::vector<int>& support(int k) const {
        return supports_[static_cast<size_t>(k)];
    }
    // Centers whose supports intersect support(k), including k itself.
    const std::vector<int>& neighbors(int k) const {
        return neighbors_[static_cast<size_t>(k)];
    }
    int max_neighbor_count() const;
    int max_cover_count() const;  // centers covering a single grid point

    // Base profile: radial C^2 bump, 1 on [0,1/2], 0 on [3/2,inf).
    static double bump(double r);

    // Admissible window for b on the given grid: [(8/L)^2, 1].
    static double min_b(const Grid& grid);

private:
    std::shared_ptr<const Grid> grid_;
    double b_;
    std::vector<Eigen::Vector2i> centers_;
    Eigen::MatrixXd g_;  // centers x points, normalized
    std::vector<std::vector<int>> supports_;
    std::vector<std::vector<int>> neighbors_;
};

PartitionOfUnity build_partition(std::shared_ptr<const Grid> grid, double b);

}  // namespace magspec

#endif
