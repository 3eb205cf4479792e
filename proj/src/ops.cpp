#include "ellab/ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ellab {

namespace {

// |k|^2 for the flat mode index, via per-axis wrap.
double k_squared(const Grid& g, const int* m) {
    double k2 = 0.0;
    for (int a = 0; a < g.dim(); ++a) {
        const double k = g.wavenumber(m[a]);
        k2 += k * k;
    }
    return k2;
}

} // namespace

SpectralField derivative(const SpectralField& f, int axis) {
    const Grid& g = f.grid();
    if (axis < 0 || axis >= g.dim())
        throw std::invalid_argument("derivative: axis out of range");
    SpectralField out = f;
    const int M = g.res();
    int m[3];
    for (int c = 0; c < f.ncomp(); ++c) {
        auto dst = out.comp(c);
        for (std::size_t i = 0; i < g.total(); ++i) {
            g.decode(i, m);
            if (g.wrap(m[axis]) == -M / 2) {
                dst[i] = Complex(0.0, 0.0);  // Nyquist has no conjugate partner
            } else {
                dst[i] *= Complex(0.0, g.wavenumber(m[axis]));
            }
        }
    }
    return out;
}

SpectralField gradient(const SpectralField& f) {
    const Grid& g = f.grid();
    SpectralField out(g, f.ncomp() * g.dim());
    for (int c = 0; c < f.ncomp(); ++c) {
        for (int a = 0; a < g.dim(); ++a) {
            SpectralField d(g, 1);
            std::copy(f.comp(c).begin(), f.comp(c).end(), d.comp(0).begin());
            d = derivative(d, a);
            std::copy(d.comp(0).begin(), d.comp(0).end(), out.comp(c * g.dim() + a).begin());
        }
    }
    return out;
}

double sobolev_norm(const SpectralField& f, double s) {
    if (s < 0.0) throw std::invalid_argument("sobolev_norm: s must be >= 0");
    const Grid& g = f.grid();
    double sum = 0.0;
    int m[3];
    for (std::size_t i = 0; i < g.total(); ++i) {
        g.decode(i, m);
        const double w = std::pow(1.0 + k_squared(g, m), s);
        for (int c = 0; c < f.ncomp(); ++c) {
            const Complex z = f.comp(c)[i];
            sum += w * std::norm(z);
        }
    }
    return std::sqrt(g.volume() * sum);
}

double lp_norm(const SpectralField& f, Lp p) {
    const Grid& g = f.grid();
    if (p == Lp::two) {
        double sum = 0.0;
        for (const Complex& z : f.coeffs()) sum += std::norm(z);
        return std::sqrt(g.volume() * sum);
    }
    const std::vector<double> samples = inverse_transform(f);
    if (p == Lp::inf) return sup_magnitude(samples, f.ncomp());
    if (p == Lp::one) {
        double sum = 0.0;
        for (std::size_t i = 0; i < g.total(); ++i) {
            double m2 = 0.0;
            for (int c = 0; c < f.ncomp(); ++c) {
                const double v = samples[static_cast<std::size_t>(c) * g.total() + i];
                m2 += v * v;
            }
            sum += std::sqrt(m2);
        }
        return g.cell_volume() * sum;
    }
    throw std::invalid_argument("lp_norm: unsupported p");
}

double l2_inner(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid() == b.grid()) || a.ncomp() != b.ncomp())
        throw std::invalid_argument("l2_inner: shape mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        sum += (a.coeffs()[i] * std::conj(b.coeffs()[i])).real();
    return a.grid().volume() * sum;
}

double sup_magnitude(std::span<const double> samples, int ncomp) {
    const std::size_t n = samples.size() / static_cast<std::size_t>(ncomp);
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double m2 = 0.0;
        for (int c = 0; c < ncomp; ++c) {
            const double v = samples[static_cast<std::size_t>(c) * n + i];
            m2 += v * v;
        }
        best = std::max(best, m2);
    }
    return std::sqrt(best);
}

SpectralField leray_project(const SpectralField& f) {
    const Grid& g = f.grid();
    const int N = g.dim();
    if (f.ncomp() != N)
        throw std::invalid_argument("leray_project: field must have dim components");
    SpectralField out = f;
    int m[3];
    double k[3];
    for (std::size_t i = 0; i < g.total(); ++i) {
        g.decode(i, m);
        double k2 = 0.0;
        for (int a = 0; a < N; ++a) {
            k[a] = g.wavenumber(m[a]);
            k2 += k[a] * k[a];
        }
        if (k2 == 0.0) continue;  // mean mode is divergence-free
        Complex kdotf(0.0, 0.0);
        for (int a = 0; a < N; ++a) kdotf += k[a] * out.comp(a)[i];
        kdotf /= k2;
        for (int a = 0; a < N; ++a) out.comp(a)[i] -= k[a] * kdotf;
    }
    return out;
}

double divergence_l2(const SpectralField& f) {
    const Grid& g = f.grid();
    if (f.ncomp() != g.dim())
        throw std::invalid_argument("divergence_l2: field must have dim components");
    const int M = g.res();
    double sum = 0.0;
    int m[3];
    for (std::size_t i = 0; i < g.total(); ++i) {
        g.decode(i, m);
        Complex div(0.0, 0.0);
        for (int a = 0; a < g.dim(); ++a) {
            if (g.wrap(m[a]) == -M / 2) continue;
            div += Complex(0.0, g.wavenumber(m[a])) * f.comp(a)[i];
        }
        sum += std::norm(div);
    }
    return std::sqrt(g.volume() * sum);
}

SpectralField heat_multiplier(const SpectralField& f, double t) {
    if (t < 0.0) throw std::invalid_argument("heat_multiplier: t must be >= 0");
    const Grid& g = f.grid();
    if (t == 0.0) return f;
    // e^{-|k|^2 t} factorizes over axes.
    const int M = g.res();
    std::vector<double> axis_factor(M);
    for (int m = 0; m < M; ++m) {
        const double k = g.wavenumber(m);
        axis_factor[m] = std::exp(-k * k * t);
    }
    SpectralField out = f;
    int m[3];
    for (std::size_t i = 0; i < g.total(); ++i) {
        g.decode(i, m);
        double w = 1.0;
        for (int a = 0; a < g.dim(); ++a) w *= axis_factor[m[a]];
        for (int c = 0; c < f.ncomp(); ++c) out.comp(c)[i] *= w;
    }
    return out;
}

bool mode_kept_by_dealias(const Grid& g, const int* m) {
    for (int a = 0; a < g.dim(); ++a) {
        if (3 * std::abs(g.wrap(m[a])) > g.res()) return false;
    }
    return true;
}

SpectralField dealias(const SpectralField& f) {
    const Grid& g = f.grid();
    SpectralField out = f;
    int m[3];
    for (std::size_t i = 0; i < g.total(); ++i) {
        g.decode(i, m);
        if (mode_kept_by_dealias(g, m)) continue;
        for (int c = 0; c < f.ncomp(); ++c) out.comp(c)[i] = Complex(0.0, 0.0);
    }
    return out;
}

double grad_linf(const SpectralField& f, int j) {
    if (j < 0) throw std::invalid_argument("grad_linf: order must be >= 0");
    if (j == 0) return lp_norm(f, Lp::inf);
    const Grid& g = f.grid();
    const int N = g.dim();
    // Accumulate |D^beta f_c|^2 pointwise over all ordered multi-indices beta
    // of length j; mixed partials enter once per ordering.
    std::vector<double> acc(g.total(), 0.0);
    std::vector<int> beta(j, 0);
    while (true) {
        SpectralField d = f;
        for (int b = 0; b < j; ++b) d = derivative(d, beta[b]);
        const std::vector<double> samples = inverse_transform(d);
        for (int c = 0; c < d.ncomp(); ++c) {
            const double* s = samples.data() + static_cast<std::size_t>(c) * g.total();
            for (std::size_t i = 0; i < g.total(); ++i) acc[i] += s[i] * s[i];
        }
        int b = j - 1;
        while (b >= 0 && ++beta[b] == N) beta[b--] = 0;
        if (b < 0) break;
    }
    double best = 0.0;
    for (double v : acc) best = std::max(best, v);
    return std::sqrt(best);
}

} // namespace ellab
