#pragma once

#include <string>
#include <vector>

#include "ellab/field.hpp"
#include "ellab/ops.hpp"

namespace ellab {

struct DecaySeriesMeta {
    int p = 1;
    int q = 2;
    int deriv_order = 0;
    std::string domain;       // "torus", "halfspace-neumann", ...
    double window_lo = 0.0;   // validity window for power-law fits
    double window_hi = 0.0;
};

struct DecaySeries {
    std::vector<double> times;   // strictly increasing, positive
    std::vector<double> norms;   // same length, positive
    DecaySeriesMeta meta;
};

struct PowerLawFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
};

// Stokes semigroup on the torus: heat flow after Leray projection,
// e^{P Lap t} P f = e^{Lap t} P f.
SpectralField stokes_propagate(const SpectralField& f, double t);

// Closed-form heat evolution of f = e^{-|x|^2/(4a)} on R^N:
// e^{t Lap} f = (a/(a+t))^{N/2} e^{-|x|^2/(4(a+t))}.
struct GaussianReference {
    double amplitude;    // peak value = L^inf norm
    double variance;     // width parameter a + t
    double l2_norm;
    double linf_norm;
};
GaussianReference gaussian_reference(double a, double t, int dim);

// Least-squares fit of log(norm) against log(t) on [t_min, t_max];
// at least 5 series points must fall inside the window.
PowerLawFit decay_fit(const DecaySeries& series, double t_min, double t_max);

// Torus validity window for power-law fits: [1, L^2/16].
double decay_window_cap(const Grid& g);

// ||grad^j e^{Lap t} f0||_{L^q} sampled at the given times (exact semigroup,
// no time stepping). q in {1, 2, inf}; j >= 0.
DecaySeries heat_decay_series(const SpectralField& f0, int p_label, Lp q, int deriv_order,
                              const std::vector<double>& times);

std::vector<double> log_spaced_times(double t_lo, double t_hi, int count);

} // namespace ellab
