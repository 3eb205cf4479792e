#include "ellab/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "ellab/ops.hpp"

namespace ellab {

double WeightedNormReport::total() const {
    double t = base_norm + early_sup;
    for (double v : late_sups) t += v;
    return t;
}

double alpha_weight(int dim, double s, int k) {
    const double a = (dim - 2.0 * (s - k)) / 4.0;
    return a > 0.0 ? a : 0.0;
}

namespace {

template <typename FieldAt>
WeightedNormReport weighted_norm_impl(std::size_t count, double dt, int dim, double s, int k,
                                      FieldAt field_at, double base) {
    if (k < 0) throw std::invalid_argument("weighted_norm: k must be >= 0");
    if (!(s - k > 0.5 * dim - 1.0))
        throw std::invalid_argument(
            "weighted_norm: hypothesis s - k > N/2 - 1 violated; the decay weights are "
            "meaningful only in that range");
    if (count == 0) throw std::invalid_argument("weighted_norm: empty trajectory");

    WeightedNormReport rep;
    rep.s = s;
    rep.k = k;
    rep.alpha = alpha_weight(dim, s, k);
    rep.base_norm = base;
    rep.late_sups.assign(static_cast<std::size_t>(k) + 2, 0.0);

    for (std::size_t n = 0; n < count; ++n) {
        const double t = dt * static_cast<double>(n);
        const SpectralField& f = field_at(n);
        if (t <= 2.0) {
            double wk = 0.0;
            for (int j = 0; j <= k; ++j) wk = std::max(wk, grad_linf(f, j));
            const double weight = (t == 0.0 && rep.alpha > 0.0) ? 0.0 : std::pow(t, rep.alpha);
            rep.early_sup = std::max(rep.early_sup, weight * wk);
        }
        if (t >= 1.0) {
            for (int j = 0; j <= k + 1; ++j) {
                const double w = std::pow(t, 0.5 * dim + 0.5 * j) * grad_linf(f, j);
                rep.late_sups[static_cast<std::size_t>(j)] =
                    std::max(rep.late_sups[static_cast<std::size_t>(j)], w);
            }
        }
    }
    return rep;
}

} // namespace

WeightedNormReport weighted_norm(const FieldSeries& series, double s, int k) {
    if (series.snaps.empty()) throw std::invalid_argument("weighted_norm: empty trajectory");
    return weighted_norm_impl(series.snaps.size(), series.dt, series.snaps[0].grid().dim(), s, k,
                              [&](std::size_t n) -> const SpectralField& { return series.snaps[n]; },
                              xst_norm(series, s));
}

WeightedNormReport weighted_norm_u(const Trajectory& traj, double s, int k) {
    traj.validate();
    return weighted_norm_impl(traj.states.size(), traj.dt(), traj.states[0].u.grid().dim(), s, k,
                              [&](std::size_t n) -> const SpectralField& { return traj.states[n].u; },
                              xst_norm_u(traj, s));
}

WeightedNormReport weighted_norm_d(const Trajectory& traj, double s, int k) {
    traj.validate();
    return weighted_norm_impl(traj.states.size(), traj.dt(), traj.states[0].d.grid().dim(), s, k,
                              [&](std::size_t n) -> const SpectralField& { return traj.states[n].d; },
                              xst_norm_d(traj, s));
}

void DecaySupSeries::append(const SimState& state) {
    times.push_back(state.t);
    for (int j = 0; j < 2; ++j) {
        u_sup[j].push_back(grad_linf(state.u, j));
        d_sup[j].push_back(grad_linf(state.d, j));
    }
}

DecayExponents decay_exponents(const DecaySupSeries& series, double t_min, double t_max,
                               const Grid& grid) {
    DecayExponents out;
    const double cap = decay_window_cap(grid);
    out.window_lo = std::max(t_min, 1.0);
    out.window_hi = std::min(t_max, cap);
    out.window_clipped = t_min < 1.0 || t_max > cap;
    if (!(out.window_hi > out.window_lo))
        throw std::invalid_argument("decay_exponents: empty window after clipping to [1, L^2/16]");

    for (int j = 0; j < 2; ++j) {
        DecaySeries s_u, s_d;
        s_u.times = series.times;
        s_u.norms = series.u_sup[j];
        s_d.times = series.times;
        s_d.norms = series.d_sup[j];
        out.u_fit[j] = decay_fit(s_u, out.window_lo, out.window_hi);
        out.d_fit[j] = decay_fit(s_d, out.window_lo, out.window_hi);
        out.target_u[j] = -0.5 * grid.dim() - 0.5 * j;
        out.target_d[j] = -0.5 * grid.dim() - 0.5 * j;
    }
    return out;
}

std::vector<double> energy_series(const Trajectory& traj) {
    std::vector<double> out;
    out.reserve(traj.states.size());
    for (const SimState& st : traj.states) out.push_back(energy(st));
    return out;
}

} // namespace ellab
