#pragma once

#include <stdexcept>
#include <vector>

#include "ellab/initial_data.hpp"
#include "ellab/trajectory.hpp"

namespace ellab {

enum class Generator { heat, stokes };

struct PicardConfig {
    double T = 0.1;        // horizon
    int n_time = 16;       // quadrature intervals (>= 8)
    int max_iter = 40;
    double tol = 0.0;      // Y_T stopping threshold; 0 selects 1e-9 (1 + data norm)
    double s = 0.6;        // regularity index; the paper wants s > N/2 - 1

    void validate(int dim) const;
};

// Per-iterate Y_T norms, successive differences and their ratios. Ratios are
// recorded only where the denominator exceeds the roundoff guard.
struct ContractionReport {
    std::vector<double> iterate_norms;
    std::vector<double> diff_norms;
    std::vector<double> ratios;
    bool converged = false;

    double terminal_ratio() const { return ratios.empty() ? 0.0 : ratios.back(); }
};

// Raised when the successive-difference ratios stay >= 1 for three
// iterations: the horizon is too large for the data size, mirroring the
// existence of T0(R).
class NonContractionError : public std::runtime_error {
  public:
    explicit NonContractionError(ContractionReport r)
        : std::runtime_error("picard iteration is not contracting; horizon too large for the data"),
          report(std::move(r)) {}
    ContractionReport report;
};

// w(t_n) = e^{A t_n} w0 + trapz_{tau <= t_n} e^{A(t_n - tau)} rhs(tau).
// The kernel is evaluated exactly per mode; quadrature error comes only from
// the integrand's tau-dependence. For the stokes generator w0 is projected
// and so is the result.
SpectralField duhamel_apply(const SpectralField& w0, const std::vector<SpectralField>& rhs,
                            std::size_t t_index, Generator gen, double dt);

// One application of the contraction map: freezes the nonlinearities along
// (w, theta) = input trajectory and solves both linear equations by Duhamel.
Trajectory picard_map(const Trajectory& frozen, const FlowData& u0, const DirectorData& d0,
                      const EtaVector& eta);

struct PicardResult {
    Trajectory trajectory;
    ContractionReport report;
};

// Iterates picard_map from the semigroup flow of the data until the Y_T
// difference drops below tol.
PicardResult picard_solve(const FlowData& u0, const DirectorData& d0, const EtaVector& eta,
                          const PicardConfig& cfg);

} // namespace ellab
