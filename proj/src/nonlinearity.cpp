#include "ellab/nonlinearity.hpp"

#include <stdexcept>

namespace ellab {

namespace {

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* who) {
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

// Real samples of every partial derivative, axis-major: block j*ncomp + c
// holds d_j f_c.
std::vector<double> gradient_samples(const SpectralField& f) {
    const Grid& g = f.grid();
    std::vector<double> out(static_cast<std::size_t>(g.dim()) * f.ncomp() * g.total());
    for (int j = 0; j < g.dim(); ++j) {
        const auto dj = inverse_transform(derivative(f, j));
        std::copy(dj.begin(), dj.end(),
                  out.begin() + static_cast<std::size_t>(j) * f.ncomp() * g.total());
    }
    return out;
}

} // namespace

SpectralField convective(const SpectralField& u, const SpectralField& w) {
    const Grid& g = u.grid();
    require_same_grid(u, w, "convective");
    if (u.ncomp() != g.dim())
        throw std::invalid_argument("convective: u must have dim components");
    const auto us = inverse_transform(u);
    const auto dw = gradient_samples(w);
    std::vector<double> prod(static_cast<std::size_t>(w.ncomp()) * g.total(), 0.0);
    for (int c = 0; c < w.ncomp(); ++c) {
        double* out = prod.data() + static_cast<std::size_t>(c) * g.total();
        for (int j = 0; j < g.dim(); ++j) {
            const double* uj = us.data() + static_cast<std::size_t>(j) * g.total();
            const double* djwc = dw.data() +
                (static_cast<std::size_t>(j) * w.ncomp() + static_cast<std::size_t>(c)) * g.total();
            for (std::size_t i = 0; i < g.total(); ++i) out[i] += uj[i] * djwc[i];
        }
    }
    return dealias(forward_transform(prod, w.ncomp(), g));
}

SpectralField ericksen_stress_div(const SpectralField& d) {
    const Grid& g = d.grid();
    const int N = g.dim();
    if (d.ncomp() != N)
        throw std::invalid_argument("ericksen_stress_div: field must have dim components");
    const auto dd = gradient_samples(d);
    const auto block = [&](int j, int c) {
        return dd.data() + (static_cast<std::size_t>(j) * N + static_cast<std::size_t>(c)) * g.total();
    };
    SpectralField out(g, N);
    std::vector<double> tij(g.total());
    for (int i = 0; i < N; ++i) {
        for (int j = i; j < N; ++j) {
            for (std::size_t x = 0; x < g.total(); ++x) {
                double acc = 0.0;
                for (int c = 0; c < N; ++c) acc += block(i, c)[x] * block(j, c)[x];
                tij[x] = acc;
            }
            const SpectralField t = dealias(forward_transform(tij, 1, g));
            // (Div T)_j += d_i T_ij; symmetry covers (Div T)_i += d_j T_ij.
            const SpectralField di_t = derivative(t, i);
            for (std::size_t x = 0; x < g.total(); ++x) out.comp(j)[x] += di_t.comp(0)[x];
            if (i != j) {
                const SpectralField dj_t = derivative(t, j);
                for (std::size_t x = 0; x < g.total(); ++x) out.comp(i)[x] += dj_t.comp(0)[x];
            }
        }
    }
    return out;
}

SpectralField director_reaction(const SpectralField& d, const EtaVector& eta) {
    const Grid& g = d.grid();
    const int N = g.dim();
    if (d.ncomp() != N || eta.dim() != N)
        throw std::invalid_argument("director_reaction: component/dimension mismatch");
    const auto dd = gradient_samples(d);
    std::vector<double> q(g.total(), 0.0);
    for (std::size_t b = 0; b < static_cast<std::size_t>(N) * N; ++b) {
        const double* s = dd.data() + b * g.total();
        for (std::size_t x = 0; x < g.total(); ++x) q[x] += s[x] * s[x];
    }
    const auto ds = inverse_transform(d);
    std::vector<double> prod(static_cast<std::size_t>(N) * g.total());
    for (int c = 0; c < N; ++c) {
        const double* dc = ds.data() + static_cast<std::size_t>(c) * g.total();
        double* out = prod.data() + static_cast<std::size_t>(c) * g.total();
        for (std::size_t x = 0; x < g.total(); ++x) out[x] = q[x] * (eta[c] + dc[x]);
    }
    return dealias(forward_transform(prod, N, g));
}

RhsPair assemble_rhs(const SpectralField& u, const SpectralField& d, const EtaVector& eta) {
    require_same_grid(u, d, "assemble_rhs");
    SpectralField f_u = leray_project(convective(u, u) + ericksen_stress_div(d));
    f_u *= -1.0;
    SpectralField f_d = director_reaction(d, eta) - convective(u, d);
    return RhsPair{std::move(f_u), std::move(f_d)};
}

SpectralField pressure_recover(const SpectralField& u, const SpectralField& d) {
    require_same_grid(u, d, "pressure_recover");
    const Grid& g = u.grid();
    const SpectralField nl = convective(u, u) + ericksen_stress_div(d);
    SpectralField p(g, 1);
    int m[3];
    for (std::size_t i = 1; i < g.total(); ++i) {
        g.decode(i, m);
        double k[3];
        double k2 = 0.0;
        for (int a = 0; a < g.dim(); ++a) {
            k[a] = g.wavenumber(m[a]);
            k2 += k[a] * k[a];
        }
        Complex kdotg(0.0, 0.0);
        for (int a = 0; a < g.dim(); ++a) kdotg += k[a] * nl.comp(a)[i];
        // grad p = -(1-P) g  <=>  phat = i (k.ghat)/|k|^2, zero mean.
        p.comp(0)[i] = Complex(0.0, 1.0) * kdotg / k2;
    }
    return p;
}

} // namespace ellab
