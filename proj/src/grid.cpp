#include "magspec/grid.hpp"

#include <cmath>

#include "magspec/errors.hpp"

namespace magspec {

Grid::Grid(int dim, double extent, double spacing)
    : dim_(dim), extent_(extent), spacing_(spacing) {
    if (dim != 1 && dim != 2)
        throw ConfigError("grid dim must be 1 or 2, got " +
                          std::to_string(dim));
    if (spacing <= 0.0) throw ConfigError("grid spacing must be positive");
    if (extent < 2.0 * spacing)
        throw ConfigError("grid extent must be at least 2*spacing");

    n_axis_ = static_cast<int>(std::lround(extent / spacing));
    weight_ = std::pow(spacing, dim);

    const double lo = -extent / 2.0;
    if (dim == 1) {
        points_.reserve(static_cast<size_t>(n_axis_));
        for (int i = 0; i < n_axis_; ++i)
            points_.emplace_back(lo + i * spacing, 0.0);
    } else {
        points_.reserve(static_cast<size_t>(n_axis_) * n_axis_);
        for (int i = 0; i < n_axis_; ++i)
            for (int j = 0; j < n_axis_; ++j)
                points_.emplace_back(lo + i * spacing, lo + j * spacing);
    }
}

double Grid::diameter() const {
    const double span = (n_axis_ - 1) * spacing_;
    return dim_ == 1 ? span : span * std::sqrt(2.0);
}

int Grid::index(int ix, int iy) const {
    return dim_ == 1 ? ix : ix * n_axis_ + iy;
}

}  // namespace magspec
