#pragma once

#include <string>

#include "ellab/field.hpp"

namespace ellab {

// Binary snapshot format shared by all tools:
//   magic "ELSF", version u32=1, dim u32, res u32, box_len f64, time f64,
//   ncomp u32, then ncomp*M^dim coefficients as interleaved (re, im)
//   little-endian IEEE-754 binary64 in row-major mode order.
void write_elsf(const std::string& path, const SpectralField& f, double time);

struct ElsfSnapshot {
    SpectralField field;
    double time;
};

ElsfSnapshot read_elsf(const std::string& path);

} // namespace ellab
