#include "ellab/run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ellab {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
    throw ConfigError(origin + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& origin, int line, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) fail(origin, line, "trailing characters in number '" + v + "'");
        return x;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(origin, line, "cannot parse number '" + v + "'");
    }
}

long parse_int(const std::string& origin, int line, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) fail(origin, line, "trailing characters in integer '" + v + "'");
        return x;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(origin, line, "cannot parse integer '" + v + "'");
    }
}

bool parse_bool(const std::string& origin, int line, const std::string& v) {
    if (v == "true" || v == "1" || v == "on") return true;
    if (v == "false" || v == "0" || v == "off") return false;
    fail(origin, line, "cannot parse boolean '" + v + "'");
}

std::vector<double> parse_vector(const std::string& origin, int line, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(origin, line, trim(item)));
    return out;
}

} // namespace

Scheme RunConfig::scheme() const {
    if (solver == "imex_euler") return Scheme::imex_euler;
    if (solver == "integrating_factor_euler") return Scheme::integrating_factor_euler;
    throw ConfigError("unknown solver '" + solver + "'");
}

void RunConfig::validate() const {
    grid();    // dimension/resolution/box_len constraints
    scheme();  // solver name
    if (eta.size() != static_cast<std::size_t>(dimension))
        throw ConfigError("eta must have `dimension` components");
    if (scenario != "zero" && scenario != "random-small" && scenario != "bump")
        throw ConfigError("unknown scenario '" + scenario + "'");
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (!(t_end >= dt)) throw ConfigError("t_end must be >= dt");
    if (snapshot_every < 1) throw ConfigError("snapshot_every must be >= 1");
    if (!(s >= 0.0)) throw ConfigError("s must be >= 0");
    if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

std::string RunConfig::echo() const {
    std::ostringstream os;
    os.precision(17);
    os << "dimension = " << dimension << "\n"
       << "resolution = " << resolution << "\n"
       << "box_len = " << box_len << "\n"
       << "s = " << s << "\n"
       << "eta = ";
    for (std::size_t i = 0; i < eta.size(); ++i) os << (i ? ", " : "") << eta[i];
    os << "\n"
       << "scenario = " << scenario << "\n"
       << "epsilon = " << epsilon << "\n"
       << "seed = " << seed << "\n"
       << "dt = " << dt << "\n"
       << "t_end = " << t_end << "\n"
       << "snapshot_every = " << snapshot_every << "\n"
       << "solver = " << solver << "\n"
       << "dealias = " << (dealias ? "true" : "false") << "\n"
       << "output_dir = " << output_dir << "\n";
    return os.str();
}

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "expected `key = value`");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) fail(origin, lineno, "empty value for key '" + key + "'");

        if (key == "dimension") cfg.dimension = static_cast<int>(parse_int(origin, lineno, value));
        else if (key == "resolution") cfg.resolution = static_cast<int>(parse_int(origin, lineno, value));
        else if (key == "box_len") cfg.box_len = parse_double(origin, lineno, value);
        else if (key == "s") cfg.s = parse_double(origin, lineno, value);
        else if (key == "eta") cfg.eta = parse_vector(origin, lineno, value);
        else if (key == "scenario") cfg.scenario = value;
        else if (key == "epsilon") cfg.epsilon = parse_double(origin, lineno, value);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(origin, lineno, value));
        else if (key == "dt") cfg.dt = parse_double(origin, lineno, value);
        else if (key == "t_end") cfg.t_end = parse_double(origin, lineno, value);
        else if (key == "snapshot_every") cfg.snapshot_every = static_cast<int>(parse_int(origin, lineno, value));
        else if (key == "solver") cfg.solver = value;
        else if (key == "dealias") cfg.dealias = parse_bool(origin, lineno, value);
        else if (key == "output_dir") cfg.output_dir = value;
        else fail(origin, lineno, "unknown key '" + key + "'");
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return cfg;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file " + path);
    std::stringstream buffer;
    buffer << is.rdbuf();
    return parse_config_text(buffer.str(), path);
}

} // namespace ellab
