#include "ellab/trajectory.hpp"

#include <cmath>
#include <stdexcept>

#include "ellab/ops.hpp"

namespace ellab {

double Trajectory::dt() const {
    if (states.size() < 2) return 0.0;
    return states[1].t - states[0].t;
}

void Trajectory::validate() const {
    if (states.empty()) throw std::invalid_argument("Trajectory: empty");
    const double step = dt();
    for (std::size_t n = 1; n < states.size(); ++n) {
        const double gap = states[n].t - states[n - 1].t;
        if (!(gap > 0.0) || std::abs(gap - step) > 1e-9 * (1.0 + std::abs(step)))
            throw std::invalid_argument("Trajectory: time grid not uniform increasing");
    }
}

namespace {

// trapezoidal weight for node n of m+1 nodes
double trapz_weight(std::size_t n, std::size_t last, double dt) {
    return (n == 0 || n == last) ? 0.5 * dt : dt;
}

template <typename Accessor>
double xst_norm_impl(std::size_t count, double dt, double s, Accessor field_at) {
    if (count == 0) throw std::invalid_argument("xst_norm: empty trajectory");
    double sup = 0.0;
    double quad = 0.0;
    for (std::size_t n = 0; n < count; ++n) {
        const SpectralField& f = field_at(n);
        sup = std::max(sup, sobolev_norm(f, s));
        const double hs1 = sobolev_norm(f, s + 1.0);
        quad += trapz_weight(n, count - 1, dt) * hs1 * hs1;
    }
    return sup + std::sqrt(quad);
}

} // namespace

double xst_norm(const FieldSeries& series, double s) {
    return xst_norm_impl(series.snaps.size(), series.dt, s,
                         [&](std::size_t n) -> const SpectralField& { return series.snaps[n]; });
}

double xst_norm_u(const Trajectory& traj, double s) {
    return xst_norm_impl(traj.states.size(), traj.dt(), s,
                         [&](std::size_t n) -> const SpectralField& { return traj.states[n].u; });
}

double xst_norm_d(const Trajectory& traj, double s) {
    return xst_norm_impl(traj.states.size(), traj.dt(), s,
                         [&](std::size_t n) -> const SpectralField& { return traj.states[n].d; });
}

double y_norm(const Trajectory& traj, double s) {
    return xst_norm_u(traj, s) + xst_norm_d(traj, s + 1.0);
}

} // namespace ellab
