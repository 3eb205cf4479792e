#include "ellab/timestepper.hpp"

#include <cmath>

#include "ellab/nonlinearity.hpp"
#include "ellab/ops.hpp"

namespace ellab {

void StepConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("StepConfig: dt must be positive");
    if (!(t_end >= dt)) throw std::invalid_argument("StepConfig: t_end must be >= dt");
    if (snapshot_every < 1) throw std::invalid_argument("StepConfig: snapshot_every must be >= 1");
}

namespace {

bool finite(const SpectralField& f) {
    for (const Complex& z : f.coeffs())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

// u <- L (u + dt f) with L the diagonal linear solve of the scheme.
void linear_update(SpectralField& w, const SpectralField* f, const StepConfig& cfg) {
    const Grid& g = w.grid();
    const int M = g.res();
    std::vector<double> axis_k2(M);
    for (int m = 0; m < M; ++m) {
        const double k = g.wavenumber(m);
        axis_k2[m] = k * k;
    }
    int m[3];
    for (std::size_t i = 0; i < g.total(); ++i) {
        g.decode(i, m);
        double k2 = 0.0;
        for (int a = 0; a < g.dim(); ++a) k2 += axis_k2[m[a]];
        const double mult = cfg.scheme == Scheme::imex_euler
                                ? 1.0 / (1.0 + cfg.dt * k2)
                                : std::exp(-k2 * cfg.dt);
        for (int c = 0; c < w.ncomp(); ++c) {
            Complex v = w.comp(c)[i];
            if (f) v += cfg.dt * f->comp(c)[i];
            w.comp(c)[i] = mult * v;
        }
    }
}

} // namespace

SimState step(const SimState& state, const EtaVector& eta, const StepConfig& cfg) {
    cfg.validate();
    SimState next{state.u, state.d, state.t + cfg.dt};
    if (cfg.linear_only) {
        linear_update(next.u, nullptr, cfg);
        linear_update(next.d, nullptr, cfg);
    } else {
        const RhsPair rhs = assemble_rhs(state.u, state.d, eta);
        linear_update(next.u, &rhs.f_u, cfg);
        linear_update(next.d, &rhs.f_d, cfg);
    }
    next.u = leray_project(next.u);
    if (cfg.dealias_state) {
        next.u = dealias(next.u);
        next.d = dealias(next.d);
    }
    if (!finite(next.u) || !finite(next.d))
        throw BlowupError(next.t, nullptr);
    return next;
}

Trajectory integrate(const FlowData& u0, const DirectorData& d0, const EtaVector& eta,
                     const StepConfig& cfg, double s, const SnapshotSink& sink,
                     bool keep_states, const StepObserver& on_step) {
    cfg.validate();
    const long n_steps = std::lround(cfg.t_end / cfg.dt);
    if (std::abs(n_steps * cfg.dt - cfg.t_end) > 1e-9 * cfg.t_end)
        throw std::invalid_argument("integrate: t_end must be an integer multiple of dt");
    if (n_steps % cfg.snapshot_every != 0)
        throw std::invalid_argument("integrate: snapshot_every must divide the step count");

    Trajectory traj;
    traj.s = s;
    SimState state{u0.u0, d0.d0, 0.0};
    auto record = [&](const SimState& st) {
        if (sink) sink(st, pressure_recover(st.u, st.d));
        if (keep_states) traj.states.push_back(st);
    };
    record(state);
    if (on_step) on_step(state);

    for (long n = 1; n <= n_steps; ++n) {
        try {
            state = step(state, eta, cfg);
        } catch (BlowupError& e) {
            throw BlowupError(e.time, std::make_shared<Trajectory>(std::move(traj)));
        }
        if (on_step) on_step(state);
        if (n % cfg.snapshot_every == 0) record(state);
    }
    if (!keep_states) traj.states.push_back(std::move(state));
    return traj;
}

double energy(const SimState& state) {
    const Grid& g = state.u.grid();
    double e = 0.0;
    for (const Complex& z : state.u.coeffs()) e += std::norm(z);
    int m[3];
    for (std::size_t i = 0; i < g.total(); ++i) {
        g.decode(i, m);
        double k2 = 0.0;
        for (int a = 0; a < g.dim(); ++a) {
            const double k = g.wavenumber(m[a]);
            k2 += k * k;
        }
        for (int c = 0; c < state.d.ncomp(); ++c) e += k2 * std::norm(state.d.comp(c)[i]);
    }
    return 0.5 * g.volume() * e;
}

} // namespace ellab
