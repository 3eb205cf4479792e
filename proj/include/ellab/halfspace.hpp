#pragma once

#include <cstdint>
#include <vector>

#include "ellab/field.hpp"

namespace ellab {

enum class HalfSpaceBc { neumann, dirichlet };

// Scalar field on the slab x_N in [0, L/2]: periodic in the transverse axes,
// reflected across both faces of the slab. The heat flow with Neumann
// (Dirichlet) conditions is realized exactly by even (odd) extension onto the
// full torus, so boundary classes are preserved to roundoff.
class HalfSpaceField {
  public:
    // grid describes the full torus the slab extends into; values are sampled
    // at x_N = j L/M for j = 0..M/2, transverse-major. Dirichlet data must
    // vanish on both faces (to roundoff).
    HalfSpaceField(const Grid& grid, HalfSpaceBc bc, std::vector<double> values);

    const Grid& grid() const { return grid_; }
    HalfSpaceBc bc() const { return bc_; }
    const std::vector<double>& values() const { return values_; }

    std::size_t normal_count() const { return static_cast<std::size_t>(grid_.res() / 2 + 1); }
    std::size_t transverse_count() const;
    double at(std::size_t i_perp, std::size_t j) const {
        return values_[i_perp * normal_count() + j];
    }

    // Even/odd extension onto the full torus as real samples.
    std::vector<double> extend() const;

    // Discrete normal derivative at the x_N = 0 face, max over the face.
    double boundary_derivative_sup() const;
    // Max |f| on the x_N = 0 face.
    double boundary_trace_sup() const;

    double sup_norm() const;
    double l2_norm() const;   // trapezoidal in the normal axis: half the torus integral
    double h1_norm() const;   // H^1 of the reflected extension, scaled to the slab

  private:
    Grid grid_;
    HalfSpaceBc bc_;
    std::vector<double> values_;
};

// Restriction of full-torus real samples (one component) to the slab.
HalfSpaceField restrict_to_slab(const Grid& grid, HalfSpaceBc bc, const std::vector<double>& full);

// Heat flow on the slab via reflection: extend, apply e^{t Lap}, restrict.
HalfSpaceField halfspace_propagate(const HalfSpaceField& f, double t);

// d/dx_N via the reflected extension; flips the boundary class.
HalfSpaceField normal_derivative(const HalfSpaceField& f);

// || d_N e^{Lap_N t} f  -  e^{Lap_D t} d_N f ||_{L^inf} over the slab,
// for Neumann data f. Zero up to roundoff by the reflection construction.
double commutation_check(const HalfSpaceField& f, double t);

// Random smooth Neumann field: even symmetrization of a seeded band-limited
// torus field.
HalfSpaceField random_neumann_field(const Grid& grid, double kmax, std::uint64_t seed);

} // namespace ellab
