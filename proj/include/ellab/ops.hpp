#pragma once

#include "ellab/field.hpp"

namespace ellab {

enum class Lp { one, two, inf };

// Spectral derivative d/dx_axis: coefficient-wise multiplication by i*k_axis.
// The Nyquist mode m = -M/2 is zeroed to keep the multiplier real-symmetric.
SpectralField derivative(const SpectralField& f, int axis);

// Gradient as an ncomp*dim-component field; block c*dim+j holds d f_c / d x_j.
SpectralField gradient(const SpectralField& f);

// ( L^N sum_k (1+|k|^2)^s |fhat_k|^2 )^{1/2}, summed over components.
// Fractional s supported; s < 0 rejected.
double sobolev_norm(const SpectralField& f, double s);

// p=2 by Parseval; p=1 by uniform-grid quadrature of the pointwise Euclidean
// magnitude; p=inf as the max of that magnitude over grid samples.
double lp_norm(const SpectralField& f, Lp p);

// Helmholtz/Leray projection: for k != 0, fhat -> fhat - k (k.fhat)/|k|^2.
// The k = 0 mode is left unchanged (constants are divergence-free).
SpectralField leray_project(const SpectralField& f);

// ||div f||_{L^2}; requires ncomp == dim.
double divergence_l2(const SpectralField& f);

// Heat propagator e^{t Laplacian}: fhat -> e^{-|k|^2 t} fhat, t >= 0.
SpectralField heat_multiplier(const SpectralField& f, double t);

// Two-thirds rule: zeroes every mode with any |wrap(m)| > M/3.
SpectralField dealias(const SpectralField& f);
bool mode_kept_by_dealias(const Grid& g, const int* m);

// L^2 inner product via Parseval, summed over components.
double l2_inner(const SpectralField& a, const SpectralField& b);

// max over grid points of the Euclidean magnitude across components,
// evaluated on the real sample view (same as lp_norm(f, Lp::inf)).
double sup_magnitude(std::span<const double> samples, int ncomp);

// Max over grid points of |grad^j f| (Frobenius over all j-th derivatives and
// components), via spectral differentiation. j >= 0.
double grad_linf(const SpectralField& f, int j);

} // namespace ellab
