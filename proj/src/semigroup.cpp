#include "ellab/semigroup.hpp"

#include <cmath>
#include <stdexcept>

namespace ellab {

SpectralField stokes_propagate(const SpectralField& f, double t) {
    return heat_multiplier(leray_project(f), t);
}

GaussianReference gaussian_reference(double a, double t, int dim) {
    if (!(a > 0.0)) throw std::invalid_argument("gaussian_reference: a must be positive");
    if (t < 0.0) throw std::invalid_argument("gaussian_reference: t must be >= 0");
    GaussianReference ref;
    ref.variance = a + t;
    ref.amplitude = std::pow(a / (a + t), 0.5 * dim);
    ref.linf_norm = ref.amplitude;
    // ||f_t||_2^2 = (a/(a+t))^N (2 pi (a+t))^{N/2}
    ref.l2_norm = std::sqrt(std::pow(a / (a + t), dim) * std::pow(2.0 * M_PI * (a + t), 0.5 * dim));
    return ref;
}

PowerLawFit decay_fit(const DecaySeries& series, double t_min, double t_max) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        const double t = series.times[i];
        if (t < t_min || t > t_max) continue;
        if (!(series.norms[i] > 0.0))
            throw std::invalid_argument("decay_fit: nonpositive norm in window");
        lx.push_back(std::log(t));
        ly.push_back(std::log(series.norms[i]));
    }
    const std::size_t n = lx.size();
    if (n < 5) throw std::invalid_argument("decay_fit: fewer than 5 points inside window");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("decay_fit: degenerate abscissae");
    PowerLawFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    for (std::size_t i = 0; i < n; ++i)
        fit.max_residual = std::max(fit.max_residual,
                                    std::abs(ly[i] - fit.slope * lx[i] - fit.intercept));
    return fit;
}

double decay_window_cap(const Grid& g) {
    return g.box_len() * g.box_len() / 16.0;
}

DecaySeries heat_decay_series(const SpectralField& f0, int p_label, Lp q, int deriv_order,
                              const std::vector<double>& times) {
    DecaySeries series;
    series.meta.p = p_label;
    series.meta.q = (q == Lp::one ? 1 : q == Lp::two ? 2 : 0);  // 0 encodes infinity
    series.meta.deriv_order = deriv_order;
    series.meta.domain = "torus";
    series.meta.window_lo = 1.0;
    series.meta.window_hi = decay_window_cap(f0.grid());
    for (double t : times) {
        const SpectralField ft = heat_multiplier(f0, t);
        double norm;
        if (deriv_order == 0) {
            norm = lp_norm(ft, q);
        } else if (q == Lp::inf) {
            norm = grad_linf(ft, deriv_order);
        } else {
            // Frobenius over the full derivative tensor, via the gradient field
            SpectralField d = ft;
            for (int j = 0; j < deriv_order; ++j) d = gradient(d);
            norm = lp_norm(d, q);
        }
        series.times.push_back(t);
        series.norms.push_back(norm);
    }
    return series;
}

std::vector<double> log_spaced_times(double t_lo, double t_hi, int count) {
    if (!(t_lo > 0.0) || !(t_hi > t_lo) || count < 2)
        throw std::invalid_argument("log_spaced_times: bad range");
    std::vector<double> out(static_cast<std::size_t>(count));
    const double l0 = std::log(t_lo), l1 = std::log(t_hi);
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = std::exp(l0 + (l1 - l0) * i / (count - 1));
    return out;
}

} // namespace ellab
