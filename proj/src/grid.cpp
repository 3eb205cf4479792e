#include "ellab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace ellab {

Grid::Grid(int dim, int res, double box_len)
    : dim_(dim), res_(res), box_len_(box_len) {
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("Grid: dim must be 2 or 3");
    if (res < 8 || res % 2 != 0)
        throw std::invalid_argument("Grid: res must be even and >= 8");
    if (!(box_len > 0.0))
        throw std::invalid_argument("Grid: box_len must be positive");
    total_ = 1;
    for (int a = 0; a < dim; ++a) total_ *= static_cast<std::size_t>(res);
    k_unit_ = 2.0 * M_PI / box_len;
}

double Grid::volume() const {
    return std::pow(box_len_, dim_);
}

double Grid::cell_volume() const {
    return std::pow(box_len_ / res_, dim_);
}

void Grid::decode(std::size_t idx, int* m) const {
    for (int a = dim_ - 1; a >= 0; --a) {
        m[a] = static_cast<int>(idx % res_);
        idx /= res_;
    }
}

} // namespace ellab
