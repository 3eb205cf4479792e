#pragma once

#include <vector>

#include "ellab/field.hpp"

namespace ellab {

// One solver snapshot: divergence-free velocity, director deviation, time.
struct SimState {
    SpectralField u;
    SpectralField d;
    double t;
};

// Time-ordered snapshots on a uniform grid {0, dt, ..., T}, plus the
// regularity index used for norm evaluation. Time integrals over the
// trajectory use trapezoidal weights on this grid.
struct Trajectory {
    std::vector<SimState> states;
    double s = 0.0;

    double dt() const;
    double horizon() const { return states.empty() ? 0.0 : states.back().t; }
    void validate() const;  // uniform increasing times, nonempty
};

// A generic time-sampled field on a uniform grid, used by the estimate
// suites; `s` is the regularity index its norms are measured at.
struct FieldSeries {
    std::vector<SpectralField> snaps;
    double dt = 0.0;
    double s = 0.0;

    double horizon() const { return dt * (snaps.empty() ? 0 : snaps.size() - 1); }
};

// X^s_T norm: max_n ||f(t_n)||_{H^s} + ( trapz_t ||f||^2_{H^{s+1}} )^{1/2}.
double xst_norm(const FieldSeries& series, double s);

// Same norm over the velocity / director parts of a trajectory.
double xst_norm_u(const Trajectory& traj, double s);
double xst_norm_d(const Trajectory& traj, double s);

// ||(u,d)||_{Y_T} = ||u||_{X^s_T} + ||d||_{X^{s+1}_T}.
double y_norm(const Trajectory& traj, double s);

} // namespace ellab
