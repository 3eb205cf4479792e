#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ellab/field.hpp"
#include "ellab/ops.hpp"

namespace ellab {

// Constant far-field director; normalized at construction.
class EtaVector {
  public:
    explicit EtaVector(std::vector<double> direction);

    const std::vector<double>& value() const { return eta_; }
    int dim() const { return static_cast<int>(eta_.size()); }
    double operator[](int i) const { return eta_[static_cast<std::size_t>(i)]; }

  private:
    std::vector<double> eta_;
};

// Director deviation d0 with |eta + d0(x)| = 1 at every grid point.
struct DirectorData {
    SpectralField d0;
    EtaVector eta;
};

// Divergence-free initial velocity.
struct FlowData {
    SpectralField u0;
};

// Pointwise normalization v = (eta + d_raw)/|eta + d_raw|, then d0 = v - eta.
// Rejects data where |eta + d_raw| drops below 0.1 anywhere.
DirectorData make_sphere_valued(const SpectralField& d_raw, const EtaVector& eta);

FlowData make_divergence_free(const SpectralField& u_raw);

// Seeded Gaussian coefficients on modes with |k| <= kmax (Euclidean physical
// wavenumber), conjugate-symmetrized so the field is real. Deterministic in
// seed. zero_mean drops the k = 0 mode.
SpectralField random_low_mode_field(const Grid& grid, int ncomp, double kmax,
                                    std::uint64_t seed, bool zero_mean = false);

// Admissible data with ||u0||_{H^s} + ||u0||_{L^1} <= eps and
// ||d0||_{H^{s+1}} + ||d0||_{L^1} <= eps, from seeded low-mode fields
// rescaled after projection/normalization.
std::pair<FlowData, DirectorData> small_data_family(double epsilon, std::uint64_t seed,
                                                    const Grid& grid, const EtaVector& eta,
                                                    double s);

// Deterministic coherent data for decay studies: a mass-carrying Gaussian
// bump of the given spatial width, projected/normalized and rescaled to the
// same norm budget as small_data_family. Random-phase data spreads
// incoherently (its heat flow peaks decay like t^{-N/4}); the t^{-N/2-j/2}
// rates are a property of bump-like data.
std::pair<FlowData, DirectorData> bump_data(double epsilon, const Grid& grid,
                                            const EtaVector& eta, double s, double width);

// The periodization of the unit-mass Gaussian (4*pi*a)^{-N/2} e^{-|x-x0|^2/(4a)}
// centered at the box midpoint: fhat_k = e^{-a|k|^2} e^{-i k.x0} / L^N.
SpectralField gaussian_bump(const Grid& grid, double a);

} // namespace ellab
