#pragma once

#include <vector>

#include "ellab/semigroup.hpp"
#include "ellab/timestepper.hpp"
#include "ellab/trajectory.hpp"

namespace ellab {

// Discrete X^s_k norm data:
//   ||w||_{X^s_k} = ||w||_{X^s} + sup_{t<=2} t^alpha ||w||_{W^{k,inf}}
//                 + sum_{j<=k+1} sup_{t>=1} t^{N/2+j/2} ||grad^j w||_inf,
// with alpha_{s,k} = max(0, (N - 2(s-k))/4). W^{k,inf} is realized as
// max_{j<=k} ||grad^j .||_inf.
struct WeightedNormReport {
    double s = 0.0;
    int k = 0;
    double alpha = 0.0;
    double early_sup = 0.0;
    std::vector<double> late_sups;  // j = 0..k+1
    double base_norm = 0.0;

    double total() const;
};

double alpha_weight(int dim, double s, int k);

// Rejects when s - k <= N/2 - 1 (the standing hypothesis of the decay lemmas).
WeightedNormReport weighted_norm(const FieldSeries& series, double s, int k);
WeightedNormReport weighted_norm_u(const Trajectory& traj, double s, int k);
WeightedNormReport weighted_norm_d(const Trajectory& traj, double s, int k);

// Streaming sup-norm series for decay fits: ||grad^j u||_inf and
// ||grad^j d||_inf for j = 0, 1.
struct DecaySupSeries {
    std::vector<double> times;
    std::vector<double> u_sup[2];
    std::vector<double> d_sup[2];

    void append(const SimState& state);
};

struct DecayExponents {
    PowerLawFit u_fit[2];
    PowerLawFit d_fit[2];
    double target_u[2];  // -N/2 - j/2
    double target_d[2];
    double window_lo = 0.0, window_hi = 0.0;
    bool window_clipped = false;  // requested window exceeded the validity cap
};

// Log-log fits over [t_min, t_max] clipped to the torus validity window
// [1, L^2/16]; rejects when fewer than 5 snapshots fall inside.
DecayExponents decay_exponents(const DecaySupSeries& series, double t_min, double t_max,
                               const Grid& grid);

std::vector<double> energy_series(const Trajectory& traj);

} // namespace ellab
