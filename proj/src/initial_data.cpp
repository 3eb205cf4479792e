#include "ellab/initial_data.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ellab {

namespace {

constexpr double kScaleGuard = 1.0 - 1e-12;  // keeps re-measured sums <= eps

double small_norm_u(const SpectralField& u, double s) {
    return sobolev_norm(u, s) + lp_norm(u, Lp::one);
}

double small_norm_d(const SpectralField& d, double s) {
    return sobolev_norm(d, s + 1.0) + lp_norm(d, Lp::one);
}

} // namespace

EtaVector::EtaVector(std::vector<double> direction) : eta_(std::move(direction)) {
    if (eta_.size() != 2 && eta_.size() != 3)
        throw std::invalid_argument("EtaVector: dimension must be 2 or 3");
    double n2 = 0.0;
    for (double v : eta_) n2 += v * v;
    const double n = std::sqrt(n2);
    if (n < 1e-12) throw std::invalid_argument("EtaVector: direction too small to normalize");
    for (double& v : eta_) v /= n;
}

DirectorData make_sphere_valued(const SpectralField& d_raw, const EtaVector& eta) {
    const Grid& g = d_raw.grid();
    const int N = g.dim();
    if (d_raw.ncomp() != N || eta.dim() != N)
        throw std::invalid_argument("make_sphere_valued: component/dimension mismatch");
    std::vector<double> samples = inverse_transform(d_raw);
    for (std::size_t i = 0; i < g.total(); ++i) {
        double v[3];
        double mag2 = 0.0;
        for (int c = 0; c < N; ++c) {
            v[c] = eta[c] + samples[static_cast<std::size_t>(c) * g.total() + i];
            mag2 += v[c] * v[c];
        }
        const double mag = std::sqrt(mag2);
        if (mag < 0.1)
            throw std::invalid_argument("make_sphere_valued: |eta + d_raw| < 0.1, normalization singular");
        for (int c = 0; c < N; ++c)
            samples[static_cast<std::size_t>(c) * g.total() + i] = v[c] / mag - eta[c];
    }
    return DirectorData{forward_transform(samples, N, g), eta};
}

FlowData make_divergence_free(const SpectralField& u_raw) {
    return FlowData{leray_project(u_raw)};
}

SpectralField random_low_mode_field(const Grid& grid, int ncomp, double kmax,
                                    std::uint64_t seed, bool zero_mean) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SpectralField raw(grid, ncomp);
    const double kmax2 = kmax * kmax;
    int m[3];
    for (std::size_t i = 0; i < grid.total(); ++i) {
        grid.decode(i, m);
        double k2 = 0.0;
        for (int a = 0; a < grid.dim(); ++a) {
            const double k = grid.wavenumber(m[a]);
            k2 += k * k;
        }
        if (k2 > kmax2) continue;
        if (zero_mean && k2 == 0.0) continue;
        for (int c = 0; c < ncomp; ++c)
            raw.comp(c)[i] = Complex(gauss(rng), gauss(rng));
    }
    // Symmetrize so the field is real: fhat(m) <- (fhat(m) + conj(fhat(-m)))/2.
    SpectralField out(grid, ncomp);
    const int M = grid.res();
    for (std::size_t i = 0; i < grid.total(); ++i) {
        grid.decode(i, m);
        std::size_t j = 0;
        for (int a = 0; a < grid.dim(); ++a) {
            const int neg = (M - m[a]) % M;
            j = j * static_cast<std::size_t>(M) + static_cast<std::size_t>(neg);
        }
        for (int c = 0; c < ncomp; ++c)
            out.comp(c)[i] = 0.5 * (raw.comp(c)[i] + std::conj(raw.comp(c)[j]));
    }
    return out;
}

SpectralField gaussian_bump(const Grid& grid, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("gaussian_bump: width parameter must be positive");
    SpectralField f(grid, 1);
    const double x0 = 0.5 * grid.box_len();
    const double inv_vol = 1.0 / grid.volume();
    int m[3];
    for (std::size_t i = 0; i < grid.total(); ++i) {
        grid.decode(i, m);
        double k2 = 0.0;
        double phase = 0.0;
        for (int axis = 0; axis < grid.dim(); ++axis) {
            const double k = grid.wavenumber(m[axis]);
            k2 += k * k;
            phase -= k * x0;
        }
        f.comp(0)[i] = std::polar(inv_vol * std::exp(-a * k2), phase);
    }
    return f;
}

namespace {

std::pair<FlowData, DirectorData> scale_to_budget(SpectralField u_raw, SpectralField d_raw,
                                                  double epsilon, const EtaVector& eta, double s) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("small data: epsilon must be positive");
    if (epsilon < 1e-290) throw std::invalid_argument("small data: epsilon underflows rescaling");

    SpectralField u = leray_project(u_raw);
    const double mu = small_norm_u(u, s);
    if (mu > 0.0) u *= kScaleGuard * epsilon / mu;

    // |eta+d| normalization is nonlinear, so the director scale is found by a
    // short fixed-point iteration on c -> c * eps / m(c).
    const double mraw = small_norm_d(d_raw, s);
    double c = mraw > 0.0 ? std::min(1.0, epsilon / mraw) : 0.0;
    DirectorData dir{SpectralField(u.grid(), u.ncomp()), eta};
    for (int it = 0; it < 4; ++it) {
        dir = make_sphere_valued(c * d_raw, eta);
        const double m = small_norm_d(dir.d0, s);
        if (m == 0.0) break;
        c *= kScaleGuard * epsilon / m;
    }
    dir = make_sphere_valued(c * d_raw, eta);
    return {FlowData{std::move(u)}, std::move(dir)};
}

} // namespace

std::pair<FlowData, DirectorData> small_data_family(double epsilon, std::uint64_t seed,
                                                    const Grid& grid, const EtaVector& eta,
                                                    double s) {
    SpectralField u_raw = random_low_mode_field(grid, grid.dim(), 4.0, seed, /*zero_mean=*/true);
    SpectralField d_raw = random_low_mode_field(grid, grid.dim(), 4.0, seed + 0x9e3779b97f4a7c15ull);
    return scale_to_budget(std::move(u_raw), std::move(d_raw), epsilon, eta, s);
}

std::pair<FlowData, DirectorData> bump_data(double epsilon, const Grid& grid,
                                            const EtaVector& eta, double s, double width) {
    const int N = grid.dim();
    const double a = 0.5 * width * width;
    SpectralField bump = gaussian_bump(grid, a);

    // Fixed component patterns; u gets its mean removed (a divergence-free
    // L^1 field on the whole space has zero integral).
    const double au[3] = {1.0, -0.7, 0.4};
    const double ad[3] = {0.6, 1.0, -0.8};
    SpectralField u_raw(grid, N), d_raw(grid, N);
    for (int c = 0; c < N; ++c) {
        for (std::size_t i = 0; i < grid.total(); ++i) {
            u_raw.comp(c)[i] = au[c] * bump.comp(0)[i];
            d_raw.comp(c)[i] = ad[c] * bump.comp(0)[i];
        }
        u_raw.comp(c)[0] = Complex(0.0, 0.0);
    }
    return scale_to_budget(std::move(u_raw), std::move(d_raw), epsilon, eta, s);
}

} // namespace ellab
