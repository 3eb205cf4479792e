#include "ellab/digest.hpp"

#include <cstdio>

namespace ellab {

Digest& Digest::bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        state_ ^= p[i];
        state_ *= 0x100000001b3ull;
    }
    return *this;
}

Digest& Digest::field(const SpectralField& f) {
    u64(static_cast<std::uint64_t>(f.grid().dim()));
    u64(static_cast<std::uint64_t>(f.grid().res()));
    f64(f.grid().box_len());
    u64(static_cast<std::uint64_t>(f.ncomp()));
    bytes(f.coeffs().data(), f.coeffs().size() * sizeof(Complex));
    return *this;
}

std::string Digest::hex() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(state_));
    return std::string(buf);
}

std::string grid_digest(const Grid& g) {
    Digest d;
    d.u64(static_cast<std::uint64_t>(g.dim()));
    d.u64(static_cast<std::uint64_t>(g.res()));
    d.f64(g.box_len());
    return d.hex();
}

} // namespace ellab
