#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellab/timestepper.hpp"

namespace ellab {

// Raised with a line-precise message on malformed configuration.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Plain-text experiment configuration, one `key = value` per line,
// `#` comments; unknown keys are errors.
struct RunConfig {
    int dimension = 3;
    int resolution = 32;
    double box_len = 2.0 * 3.14159265358979323846;
    double s = 0.6;
    std::vector<double> eta = {0.0, 0.0, 1.0};
    std::string scenario = "random-small";  // zero | random-small | bump
    double epsilon = 1e-2;
    std::uint64_t seed = 7;
    double dt = 1e-3;
    double t_end = 1.0;
    int snapshot_every = 10;
    std::string solver = "imex_euler";  // imex_euler | integrating_factor_euler
    bool dealias = true;
    std::string output_dir = "out";

    Grid grid() const { return Grid(dimension, resolution, box_len); }
    Scheme scheme() const;
    void validate() const;

    // Echo in the config file syntax (for the manifest).
    std::string echo() const;
};

RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin);

} // namespace ellab
