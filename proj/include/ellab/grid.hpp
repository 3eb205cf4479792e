#pragma once

#include <cstddef>

namespace ellab {

// Periodic box [0,L)^N sampled on a uniform M^N lattice, M even.
// Mode index m in {0,...,M-1} maps to the symmetric range {-M/2,...,M/2-1}
// via wrap(); the physical wavenumber of mode m is 2*pi*wrap(m)/L.
class Grid {
  public:
    Grid(int dim, int res, double box_len);

    int dim() const { return dim_; }
    int res() const { return res_; }
    double box_len() const { return box_len_; }

    std::size_t total() const { return total_; }       // M^dim
    double volume() const;                             // L^dim
    double cell_volume() const;                        // (L/M)^dim

    int wrap(int m) const { return m < res_ / 2 ? m : m - res_; }
    double wavenumber(int m) const { return k_unit_ * wrap(m); }
    double k_unit() const { return k_unit_; }          // 2*pi/L

    // Decodes a flat row-major coefficient index into per-axis mode indices.
    void decode(std::size_t idx, int* m) const;

    // dim == 2 is a smoke-test mode only; the analysis assumes dim >= 3.
    bool paper_regime() const { return dim_ >= 3; }

    bool operator==(const Grid&) const = default;

  private:
    int dim_;
    int res_;
    double box_len_;
    std::size_t total_;
    double k_unit_;
};

} // namespace ellab
