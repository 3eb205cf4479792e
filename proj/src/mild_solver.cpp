#include "ellab/mild_solver.hpp"

#include <cmath>
#include <limits>

#include "ellab/nonlinearity.hpp"
#include "ellab/ops.hpp"

namespace ellab {

void PicardConfig::validate(int dim) const {
    if (!(T > 0.0)) throw std::invalid_argument("PicardConfig: T must be positive");
    if (n_time < 8) throw std::invalid_argument("PicardConfig: n_time must be >= 8");
    if (max_iter < 1) throw std::invalid_argument("PicardConfig: max_iter must be >= 1");
    if (tol < 0.0) throw std::invalid_argument("PicardConfig: tol must be >= 0");
    if (!(s > 0.5 * dim - 1.0))
        throw std::invalid_argument("PicardConfig: s must exceed N/2 - 1");
}

SpectralField duhamel_apply(const SpectralField& w0, const std::vector<SpectralField>& rhs,
                            std::size_t t_index, Generator gen, double dt) {
    if (t_index >= rhs.size())
        throw std::invalid_argument("duhamel_apply: t_index outside the sampled right side");
    const bool stokes = gen == Generator::stokes;
    SpectralField acc = stokes ? leray_project(w0) : w0;
    acc = heat_multiplier(acc, dt * static_cast<double>(t_index));
    for (std::size_t j = 0; t_index > 0 && j <= t_index; ++j) {
        const double weight = (j == 0 || j == t_index) ? 0.5 * dt : dt;
        SpectralField term = stokes ? leray_project(rhs[j]) : rhs[j];
        term = heat_multiplier(term, dt * static_cast<double>(t_index - j));
        term *= weight;
        acc += term;
    }
    return acc;
}

Trajectory picard_map(const Trajectory& frozen, const FlowData& u0, const DirectorData& d0,
                      const EtaVector& eta) {
    frozen.validate();
    const std::size_t n = frozen.states.size();
    const double dt = frozen.dt();
    if (!(frozen.states[0].u.grid() == u0.u0.grid()))
        throw std::invalid_argument("picard_map: grid mismatch between trajectory and data");

    std::vector<SpectralField> f_u, f_d;
    f_u.reserve(n);
    f_d.reserve(n);
    for (const SimState& state : frozen.states) {
        RhsPair rhs = assemble_rhs(state.u, state.d, eta);
        f_u.push_back(std::move(rhs.f_u));
        f_d.push_back(std::move(rhs.f_d));
    }

    Trajectory out;
    out.s = frozen.s;
    out.states.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.states.push_back(SimState{duhamel_apply(u0.u0, f_u, i, Generator::stokes, dt),
                                      duhamel_apply(d0.d0, f_d, i, Generator::heat, dt),
                                      dt * static_cast<double>(i)});
    }
    return out;
}

namespace {

Trajectory semigroup_flow(const FlowData& u0, const DirectorData& d0, const PicardConfig& cfg) {
    Trajectory traj;
    traj.s = cfg.s;
    const double dt = cfg.T / cfg.n_time;
    const SpectralField pu0 = leray_project(u0.u0);
    for (int i = 0; i <= cfg.n_time; ++i) {
        const double t = dt * i;
        traj.states.push_back(SimState{heat_multiplier(pu0, t), heat_multiplier(d0.d0, t), t});
    }
    return traj;
}

double diff_y_norm(const Trajectory& a, const Trajectory& b, double s) {
    Trajectory diff;
    diff.s = s;
    diff.states.reserve(a.states.size());
    for (std::size_t i = 0; i < a.states.size(); ++i)
        diff.states.push_back(SimState{a.states[i].u - b.states[i].u,
                                       a.states[i].d - b.states[i].d, a.states[i].t});
    return y_norm(diff, s);
}

} // namespace

PicardResult picard_solve(const FlowData& u0, const DirectorData& d0, const EtaVector& eta,
                          const PicardConfig& cfg) {
    cfg.validate(u0.u0.grid().dim());
    const double data_norm = sobolev_norm(u0.u0, cfg.s) + sobolev_norm(d0.d0, cfg.s + 1.0);
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-9 * (1.0 + data_norm);

    Trajectory current = semigroup_flow(u0, d0, cfg);
    ContractionReport report;
    report.iterate_norms.push_back(y_norm(current, cfg.s));

    int stalled = 0;
    for (int it = 0; it < cfg.max_iter; ++it) {
        Trajectory next = picard_map(current, u0, d0, eta);
        const double diff = diff_y_norm(next, current, cfg.s);
        report.iterate_norms.push_back(y_norm(next, cfg.s));
        if (!report.diff_norms.empty()) {
            const double prev = report.diff_norms.back();
            const double guard = 10.0 * std::numeric_limits<double>::epsilon() *
                                 (1.0 + report.iterate_norms.back());
            if (prev > guard) report.ratios.push_back(diff / prev);
        }
        report.diff_norms.push_back(diff);
        current = std::move(next);

        if (!std::isfinite(diff)) throw NonContractionError(std::move(report));
        if (!report.ratios.empty() && report.ratios.back() >= 1.0) {
            if (++stalled >= 3) throw NonContractionError(std::move(report));
        } else {
            stalled = 0;
        }
        if (diff <= tol) {
            report.converged = report.ratios.empty() || report.ratios.back() < 1.0;
            break;
        }
    }
    return PicardResult{std::move(current), std::move(report)};
}

} // namespace ellab
