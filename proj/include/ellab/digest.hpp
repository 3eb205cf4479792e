#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "ellab/field.hpp"

namespace ellab {

// FNV-1a, used for reproducibility digests in reports and manifests.
class Digest {
  public:
    Digest& bytes(const void* data, std::size_t n);
    Digest& f64(double v) { return bytes(&v, sizeof(v)); }
    Digest& u64(std::uint64_t v) { return bytes(&v, sizeof(v)); }
    Digest& text(const std::string& s) { return bytes(s.data(), s.size()); }
    Digest& field(const SpectralField& f);

    std::string hex() const;
    std::uint64_t value() const { return state_; }

  private:
    std::uint64_t state_ = 0xcbf29ce484222325ull;
};

std::string grid_digest(const Grid& g);

} // namespace ellab
