#pragma once

#include "ellab/initial_data.hpp"

namespace ellab {

// Right sides of the projected system: f_u is divergence-free by
// construction, f_d drives the director equation.
struct RhsPair {
    SpectralField f_u;
    SpectralField f_d;
};

// dealias(u . grad w): transform to real space, multiply pointwise, return to
// spectral space. u must have dim components; w is any multi-component field
// on the same grid.
SpectralField convective(const SpectralField& u, const SpectralField& w);

// Div(grad d (.) grad d) with [grad z (.) grad w]_{ij} = d_i z . d_j w:
// forms the dealiased tensor T_ij = d_i d . d_j d pointwise, returns
// (Div T)_j = sum_i d_i T_ij.
SpectralField ericksen_stress_div(const SpectralField& d);

// |grad d|^2 (eta + d), dealiased; |grad d|^2 = sum_{i,c} (d_i d_c)^2.
SpectralField director_reaction(const SpectralField& d, const EtaVector& eta);

// f_u = -P[u.grad u + Div(grad d (.) grad d)],  f_d = -u.grad d + |grad d|^2 (eta + d).
RhsPair assemble_rhs(const SpectralField& u, const SpectralField& d, const EtaVector& eta);

// Pressure with zero mean recovered from -Lap p = div(u.grad u + Div(grad d (.) grad d));
// the result satisfies grad p = -(1-P) g for g the unprojected nonlinearity.
SpectralField pressure_recover(const SpectralField& u, const SpectralField& d);

} // namespace ellab
