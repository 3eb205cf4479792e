#include "ellab/field.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace ellab {

namespace {

// Plans are cached per (dim, res, sign) and executed through the new-array
// interface. FFTW_UNALIGNED makes ordinary vector storage valid for
// execution; planning itself is serialized (the FFTW planner is not
// thread-safe, execution is).
class PlanCache {
  public:
    static fftw_plan get(const Grid& g, int sign) {
        static PlanCache cache;
        std::lock_guard<std::mutex> lock(cache.mutex_);
        auto key = std::make_tuple(g.dim(), g.res(), sign);
        auto it = cache.plans_.find(key);
        if (it != cache.plans_.end()) return it->second;

        std::vector<Complex> in(g.total()), out(g.total());
        int n[3] = {g.res(), g.res(), g.res()};
        fftw_plan p = fftw_plan_dft(g.dim(), n,
                                    reinterpret_cast<fftw_complex*>(in.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()),
                                    sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw_plan_dft failed");
        cache.plans_.emplace(key, p);
        return p;
    }

  private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

void execute(const Grid& g, int sign, const Complex* in, Complex* out) {
    fftw_plan p = PlanCache::get(g, sign);
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

} // namespace

SpectralField::SpectralField(const Grid& grid, int ncomp)
    : grid_(grid), ncomp_(ncomp) {
    if (ncomp < 1) throw std::invalid_argument("SpectralField: ncomp must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(ncomp) * grid.total(), Complex(0.0, 0.0));
}

std::span<Complex> SpectralField::comp(int c) {
    return std::span<Complex>(coeffs_).subspan(static_cast<std::size_t>(c) * grid_.total(), grid_.total());
}

std::span<const Complex> SpectralField::comp(int c) const {
    return std::span<const Complex>(coeffs_).subspan(static_cast<std::size_t>(c) * grid_.total(), grid_.total());
}

SpectralField& SpectralField::operator+=(const SpectralField& rhs) {
    if (!(grid_ == rhs.grid_) || ncomp_ != rhs.ncomp_)
        throw std::invalid_argument("SpectralField: shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& rhs) {
    if (!(grid_ == rhs.grid_) || ncomp_ != rhs.ncomp_)
        throw std::invalid_argument("SpectralField: shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double a) {
    for (auto& c : coeffs_) c *= a;
    return *this;
}

SpectralField forward_transform(std::span<const double> samples, int ncomp, const Grid& grid) {
    if (samples.size() != static_cast<std::size_t>(ncomp) * grid.total())
        throw std::invalid_argument("forward_transform: sample count does not match grid");
    SpectralField f(grid, ncomp);
    const double scale = 1.0 / static_cast<double>(grid.total());
    std::vector<Complex> buf(grid.total());
    for (int c = 0; c < ncomp; ++c) {
        const double* s = samples.data() + static_cast<std::size_t>(c) * grid.total();
        for (std::size_t i = 0; i < grid.total(); ++i) buf[i] = Complex(s[i], 0.0);
        execute(grid, FFTW_FORWARD, buf.data(), f.comp(c).data());
        for (auto& z : f.comp(c)) z *= scale;
    }
    return f;
}

std::vector<double> inverse_transform(const SpectralField& f) {
    const Grid& g = f.grid();
    std::vector<double> samples(static_cast<std::size_t>(f.ncomp()) * g.total());
    std::vector<Complex> buf(g.total());
    for (int c = 0; c < f.ncomp(); ++c) {
        execute(g, FFTW_BACKWARD, f.comp(c).data(), buf.data());
        double* s = samples.data() + static_cast<std::size_t>(c) * g.total();
        for (std::size_t i = 0; i < g.total(); ++i) s[i] = buf[i].real();
    }
    return samples;
}

} // namespace ellab
