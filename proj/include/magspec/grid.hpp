#ifndef MAGSPEC_GRID_HPP
#define MAGSPEC_GRID_HPP

#include <Eigen/Core>
#include <vector>

namespace magspec {

// Coordinates live in at most two dimensions; 1D grids keep the second
// component at zero so all geometry code is dimension-agnostic.
using Point = Eigen::Vector2d;

// Uniform discretization of the centered box [-L/2, L/2)^dim.
// `weight` (= h^dim) is the measure attached to every point, so kernel sums
// approximate continuum integrals; lattice models use h = 1 (counting
// measure).
class Grid {
public:
    Grid(int dim, double extent, double spacing);

    int dim() const { return dim_; }
    double extent() const { return extent_; }
    double spacing() const { return spacing_; }
    double weight() const { return weight_; }
    int size() const { return static_cast<int>(points_.size()); }
    int points_per_axis() const { return n_axis_; }
    const std::vector<Point>& points() const { return points_; }
    const Point& point(int i) const { return points_[static_cast<size_t>(i)]; }

    // Largest distance between two grid points.
    double diameter() const;

    // Lexicographic index of the axis-coordinate tuple (1D: ix only).
    int index(int ix, int iy = 0) const;

private:
    int dim_;
    double extent_;
    double spacing_;
    double weight_;
    int n_axis_;
    std::vector<Point> points_;
};

}  // namespace magspec

#endif
