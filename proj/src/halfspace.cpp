#include "ellab/halfspace.hpp"

#include <cmath>
#include <stdexcept>

#include "ellab/initial_data.hpp"
#include "ellab/ops.hpp"

namespace ellab {

namespace {

constexpr double kBcTol = 1e-10;

} // namespace

HalfSpaceField::HalfSpaceField(const Grid& grid, HalfSpaceBc bc, std::vector<double> values)
    : grid_(grid), bc_(bc), values_(std::move(values)) {
    if (values_.size() != transverse_count() * normal_count())
        throw std::invalid_argument("HalfSpaceField: sample count does not match slab");
    if (bc_ == HalfSpaceBc::dirichlet) {
        double scale = 0.0;
        for (double v : values_) scale = std::max(scale, std::abs(v));
        const std::size_t last = normal_count() - 1;
        for (std::size_t ip = 0; ip < transverse_count(); ++ip) {
            if (std::abs(at(ip, 0)) > kBcTol * (1.0 + scale) ||
                std::abs(at(ip, last)) > kBcTol * (1.0 + scale))
                throw std::invalid_argument("HalfSpaceField: dirichlet data must vanish on the faces");
        }
    }
}

std::size_t HalfSpaceField::transverse_count() const {
    std::size_t n = 1;
    for (int a = 0; a < grid_.dim() - 1; ++a) n *= static_cast<std::size_t>(grid_.res());
    return n;
}

std::vector<double> HalfSpaceField::extend() const {
    const int M = grid_.res();
    std::vector<double> full(grid_.total());
    const std::size_t nt = transverse_count();
    for (std::size_t ip = 0; ip < nt; ++ip) {
        for (int i = 0; i < M; ++i) {
            const int j = i <= M / 2 ? i : M - i;
            double v = at(ip, static_cast<std::size_t>(j));
            if (bc_ == HalfSpaceBc::dirichlet && i > M / 2) v = -v;
            full[ip * static_cast<std::size_t>(M) + static_cast<std::size_t>(i)] = v;
        }
    }
    return full;
}

HalfSpaceField restrict_to_slab(const Grid& grid, HalfSpaceBc bc, const std::vector<double>& full) {
    if (full.size() != grid.total())
        throw std::invalid_argument("restrict_to_slab: sample count does not match grid");
    const int M = grid.res();
    const std::size_t nn = static_cast<std::size_t>(M / 2 + 1);
    std::size_t nt = 1;
    for (int a = 0; a < grid.dim() - 1; ++a) nt *= static_cast<std::size_t>(M);
    std::vector<double> slab(nt * nn);
    for (std::size_t ip = 0; ip < nt; ++ip)
        for (std::size_t j = 0; j < nn; ++j)
            slab[ip * nn + j] = full[ip * static_cast<std::size_t>(M) + j];
    return HalfSpaceField(grid, bc, std::move(slab));
}

double HalfSpaceField::boundary_derivative_sup() const {
    // spectral d/dx_N of the extension, sampled at x_N = 0
    const SpectralField f = forward_transform(extend(), 1, grid_);
    const auto d = inverse_transform(derivative(f, grid_.dim() - 1));
    const int M = grid_.res();
    double worst = 0.0;
    for (std::size_t ip = 0; ip < transverse_count(); ++ip)
        worst = std::max(worst, std::abs(d[ip * static_cast<std::size_t>(M)]));
    return worst;
}

double HalfSpaceField::boundary_trace_sup() const {
    double worst = 0.0;
    for (std::size_t ip = 0; ip < transverse_count(); ++ip)
        worst = std::max(worst, std::abs(at(ip, 0)));
    return worst;
}

double HalfSpaceField::sup_norm() const {
    double worst = 0.0;
    for (double v : values_) worst = std::max(worst, std::abs(v));
    return worst;
}

double HalfSpaceField::l2_norm() const {
    // trapezoid in the normal axis folds the reflected torus integral exactly in half
    const std::size_t nn = normal_count();
    double sum = 0.0;
    for (std::size_t ip = 0; ip < transverse_count(); ++ip)
        for (std::size_t j = 0; j < nn; ++j) {
            const double w = (j == 0 || j == nn - 1) ? 0.5 : 1.0;
            const double v = at(ip, j);
            sum += w * v * v;
        }
    return std::sqrt(sum * grid_.cell_volume());
}

double HalfSpaceField::h1_norm() const {
    const SpectralField f = forward_transform(extend(), 1, grid_);
    return sobolev_norm(f, 1.0) / std::sqrt(2.0);
}

HalfSpaceField halfspace_propagate(const HalfSpaceField& f, double t) {
    if (t < 0.0) throw std::invalid_argument("halfspace_propagate: t must be >= 0");
    const SpectralField spec = forward_transform(f.extend(), 1, f.grid());
    const auto flowed = inverse_transform(heat_multiplier(spec, t));
    return restrict_to_slab(f.grid(), f.bc(), flowed);
}

HalfSpaceField normal_derivative(const HalfSpaceField& f) {
    const SpectralField spec = forward_transform(f.extend(), 1, f.grid());
    const auto d = inverse_transform(derivative(spec, f.grid().dim() - 1));
    const HalfSpaceBc flipped =
        f.bc() == HalfSpaceBc::neumann ? HalfSpaceBc::dirichlet : HalfSpaceBc::neumann;
    return restrict_to_slab(f.grid(), flipped, d);
}

double commutation_check(const HalfSpaceField& f, double t) {
    if (f.bc() != HalfSpaceBc::neumann)
        throw std::invalid_argument("commutation_check: input must be a Neumann field");
    const HalfSpaceField lhs = normal_derivative(halfspace_propagate(f, t));
    const HalfSpaceField rhs = halfspace_propagate(normal_derivative(f), t);
    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.values().size(); ++i)
        worst = std::max(worst, std::abs(lhs.values()[i] - rhs.values()[i]));
    return worst;
}

HalfSpaceField random_neumann_field(const Grid& grid, double kmax, std::uint64_t seed) {
    const auto full = inverse_transform(random_low_mode_field(grid, 1, kmax, seed));
    const int M = grid.res();
    std::size_t nt = 1;
    for (int a = 0; a < grid.dim() - 1; ++a) nt *= static_cast<std::size_t>(M);
    std::vector<double> sym(grid.total());
    for (std::size_t ip = 0; ip < nt; ++ip)
        for (int i = 0; i < M; ++i) {
            const int mirror = (M - i) % M;
            sym[ip * static_cast<std::size_t>(M) + static_cast<std::size_t>(i)] =
                0.5 * (full[ip * static_cast<std::size_t>(M) + static_cast<std::size_t>(i)] +
                       full[ip * static_cast<std::size_t>(M) + static_cast<std::size_t>(mirror)]);
        }
    return restrict_to_slab(grid, HalfSpaceBc::neumann, sym);
}

} // namespace ellab
