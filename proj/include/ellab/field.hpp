#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ellab/grid.hpp"

namespace ellab {

using Complex = std::complex<double>;

// Multi-component field stored as Fourier coefficients under the convention
//   f(x) = sum_k fhat_k e^{i k.x},
// one contiguous block of M^N coefficients per component, FFTW (row-major,
// unshifted) mode order. Fields representing real data keep the conjugate
// symmetry fhat_{-k} = conj(fhat_k) to roundoff; every operation here
// preserves it.
class SpectralField {
  public:
    SpectralField(const Grid& grid, int ncomp);

    const Grid& grid() const { return grid_; }
    int ncomp() const { return ncomp_; }
    std::size_t size() const { return coeffs_.size(); }

    std::span<Complex> comp(int c);
    std::span<const Complex> comp(int c) const;
    std::span<Complex> coeffs() { return coeffs_; }
    std::span<const Complex> coeffs() const { return coeffs_; }

    SpectralField& operator+=(const SpectralField& rhs);
    SpectralField& operator-=(const SpectralField& rhs);
    SpectralField& operator*=(double a);

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double a, SpectralField f) { return f *= a; }

  private:
    Grid grid_;
    int ncomp_;
    std::vector<Complex> coeffs_;
};

// DFT of real samples (ncomp blocks of M^N values, row-major).
SpectralField forward_transform(std::span<const double> samples, int ncomp, const Grid& grid);

// Real-space sample view; imaginary parts (roundoff for symmetric fields) are dropped.
std::vector<double> inverse_transform(const SpectralField& f);

} // namespace ellab
