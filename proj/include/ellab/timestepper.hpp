#pragma once

#include <functional>
#include <memory>
#include <stdexcept>

#include "ellab/initial_data.hpp"
#include "ellab/trajectory.hpp"

namespace ellab {

enum class Scheme { imex_euler, integrating_factor_euler };

struct StepConfig {
    double dt = 1e-3;
    double t_end = 1.0;
    int snapshot_every = 1;
    Scheme scheme = Scheme::imex_euler;
    bool dealias_state = true;
    bool linear_only = false;  // drops the nonlinearity (linear-stability diagnostics)

    void validate() const;
};

// NaN/Inf appeared in a coefficient; carries the offending time and whatever
// trajectory had been recorded up to that point.
class BlowupError : public std::runtime_error {
  public:
    BlowupError(double t, std::shared_ptr<Trajectory> partial_traj)
        : std::runtime_error("non-finite coefficient during time stepping"),
          time(t), partial(std::move(partial_traj)) {}
    double time;
    std::shared_ptr<Trajectory> partial;
};

// One semi-implicit step: nonlinearity explicit at the old state, linear part
// by (1 + dt|k|^2)^{-1} (imex) or e^{-|k|^2 dt} (integrating factor), then
// re-projection of the velocity.
SimState step(const SimState& state, const EtaVector& eta, const StepConfig& cfg);

// Called once per recorded snapshot with the state and the recovered pressure.
using SnapshotSink = std::function<void(const SimState&, const SpectralField& pressure)>;

// Runs step() to t_end recording every snapshot_every-th state (plus the
// initial one). With keep_states = false the returned trajectory holds only
// the final state; per-step observers can be attached through on_step.
using StepObserver = std::function<void(const SimState&)>;
Trajectory integrate(const FlowData& u0, const DirectorData& d0, const EtaVector& eta,
                     const StepConfig& cfg, double s = 0.6,
                     const SnapshotSink& sink = nullptr,
                     bool keep_states = true,
                     const StepObserver& on_step = nullptr);

// E(t) = 1/2 ||u||_{L^2}^2 + 1/2 ||grad d||_{L^2}^2, by Parseval.
double energy(const SimState& state);

} // namespace ellab
