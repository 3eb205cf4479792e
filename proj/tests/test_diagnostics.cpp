#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ellab/cli.hpp"
#include "ellab/diagnostics.hpp"
#include "ellab/elsf.hpp"
#include "ellab/run_config.hpp"
#include "test_support.hpp"

using namespace ellab;
using namespace ellab::test;

namespace fs = std::filesystem;

namespace {

const double kPi = M_PI;

int run(std::vector<std::string> args) {
    std::vector<char*> argv;
    args.insert(args.begin(), "ellab");
    for (auto& a : args) argv.push_back(a.data());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string write_config(const fs::path& dir, const std::string& body) {
    const fs::path p = dir / "run.cfg";
    std::ofstream os(p);
    os << body;
    return p.string();
}

} // namespace

TEST_CASE("alpha weight matches the paper arithmetic") {
    CHECK(alpha_weight(3, 0.6, 0) == doctest::Approx(0.45));
    CHECK(alpha_weight(3, 1.6, 1) == doctest::Approx(0.45));
    CHECK(alpha_weight(3, 5.0, 0) == 0.0);  // s - k > N/2
}

TEST_CASE("weighted norm: rejection, zero trajectory, heat flow of a single mode") {
    Grid g(3, 16, 2 * kPi);
    const double s = 0.6;
    FieldSeries zero{std::vector<SpectralField>(17, SpectralField(g, 1)), 0.25, s};
    auto rep = weighted_norm(zero, s, 0);
    CHECK(rep.alpha == doctest::Approx(0.45));
    CHECK(rep.base_norm == 0.0);
    CHECK(rep.early_sup == 0.0);
    for (double v : rep.late_sups) CHECK(v == 0.0);

    CHECK_THROWS_AS(weighted_norm(zero, s, 1), std::invalid_argument);  // s - k <= N/2 - 1

    // heat flow of sin(x1): sup_{t<=2} t^0.45 e^{-t} at grid times, and the
    // late weights hit the t = T endpoint since e^{-t} decays slower than any
    // weight only until t^w e^{-t} peaks at t = w
    auto f = scalar_field(g, [](const double* x) { return std::sin(x[0]); });
    FieldSeries flow{{}, 0.25, s};
    for (int n = 0; n <= 16; ++n) flow.snaps.push_back(heat_multiplier(f, 0.25 * n));
    auto rep2 = weighted_norm(flow, s, 0);
    double expect_early = 0.0;
    for (int n = 0; n <= 8; ++n) {
        const double t = 0.25 * n;
        expect_early = std::max(expect_early, std::pow(t, 0.45) * std::exp(-t));
    }
    CHECK(rep2.early_sup == doctest::Approx(expect_early).epsilon(1e-10));
    double expect_late0 = 0.0;
    for (int n = 4; n <= 16; ++n) {
        const double t = 0.25 * n;
        expect_late0 = std::max(expect_late0, std::pow(t, 1.5) * std::exp(-t));
    }
    CHECK(rep2.late_sups[0] == doctest::Approx(expect_late0).epsilon(1e-10));
}

TEST_CASE("decay exponents recover synthetic power laws exactly and clip the window") {
    Grid g(3, 16, 16 * kPi);
    DecaySupSeries series;
    for (double t = 0.5; t <= 40.0; t += 0.5) {
        series.times.push_back(t);
        series.u_sup[0].push_back(2.0 * std::pow(t, -1.5));
        series.u_sup[1].push_back(1.7 * std::pow(t, -2.0));
        series.d_sup[0].push_back(0.9 * std::pow(t, -1.5));
        series.d_sup[1].push_back(0.4 * std::pow(t, -2.0));
    }
    auto result = decay_exponents(series, 0.5, 40.0, g);
    CHECK(result.window_clipped);  // t_min below 1
    CHECK(result.window_lo == 1.0);
    CHECK(result.u_fit[0].slope == doctest::Approx(-1.5).epsilon(1e-10));
    CHECK(result.u_fit[1].slope == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(result.d_fit[0].slope == doctest::Approx(-1.5).epsilon(1e-10));
    CHECK(result.d_fit[1].slope == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(result.target_u[0] == -1.5);
    CHECK(result.target_u[1] == -2.0);
}

TEST_CASE("config parsing: defaults, overrides, and line-precise errors") {
    auto cfg = parse_config_text("", "mem");
    CHECK(cfg.dimension == 3);
    CHECK(cfg.scenario == "random-small");

    auto cfg2 = parse_config_text(
        "# comment\n"
        "dimension = 3\n"
        "resolution = 16\n"
        "eta = 0, 0, 1\n"
        "epsilon = 1e-3   # trailing comment\n"
        "scenario = bump\n",
        "mem");
    CHECK(cfg2.resolution == 16);
    CHECK(cfg2.epsilon == 1e-3);
    CHECK(cfg2.scenario == "bump");

    try {
        parse_config_text("dimension = 3\nbogus_key = 1\n", "mem");
        CHECK(false);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("mem:2") != std::string::npos);
        CHECK(std::string(e.what()).find("bogus_key") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config_text("resolution = 7\n", "mem"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("eta = 1, 0\n", "mem"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("dt = -1\n", "mem"), ConfigError);
}

TEST_CASE("cli: simulate with the zero scenario produces zero snapshots and exit 0") {
    TempDir tmp("ellab_cli_sim");
    const std::string cfg = write_config(tmp.path,
                                         "resolution = 8\n"
                                         "scenario = zero\n"
                                         "dt = 0.01\n"
                                         "t_end = 0.05\n"
                                         "snapshot_every = 5\n"
                                         "output_dir = " + (tmp.path / "out").string() + "\n");
    CHECK(run({"simulate", "-c", cfg}) == 0);
    CHECK(fs::exists(tmp.path / "out" / "u_000001.elsf"));
    CHECK(fs::exists(tmp.path / "out" / "manifest.txt"));
    auto snap = read_elsf((tmp.path / "out" / "u_000001.elsf").string());
    CHECK(lp_norm(snap.field, Lp::two) == 0.0);
}

TEST_CASE("cli: bad config exits 1 with a line-precise message") {
    TempDir tmp("ellab_cli_bad");
    const std::string cfg = write_config(tmp.path, "definitely_not_a_key = 3\n");
    CHECK(run({"simulate", "-c", cfg}) == 1);
    CHECK(run({"simulate", "-c", (tmp.path / "missing.cfg").string()}) == 1);
}

TEST_CASE("cli: picard with an oversized horizon exits 3 and saves the report") {
    TempDir tmp("ellab_cli_pic");
    const std::string cfg = write_config(tmp.path,
                                         "resolution = 16\n"
                                         "scenario = random-small\n"
                                         "epsilon = 2000.0\n"
                                         "dt = 0.125\n"
                                         "t_end = 2.0\n"
                                         "output_dir = " + (tmp.path / "out").string() + "\n");
    CHECK(run({"picard", "-c", cfg}) == 3);
    CHECK(fs::exists(tmp.path / "out" / "contraction.csv"));
}

TEST_CASE("cli: picard on small data converges with exit 0 and is byte-deterministic") {
    TempDir tmp("ellab_cli_pic_ok");
    const std::string cfg = write_config(tmp.path,
                                         "resolution = 16\n"
                                         "scenario = random-small\n"
                                         "epsilon = 1e-3\n"
                                         "dt = 0.0125\n"
                                         "t_end = 0.1\n"
                                         "output_dir = " + (tmp.path / "out").string() + "\n");
    CHECK(run({"picard", "-c", cfg}) == 0);
    std::ifstream is1(tmp.path / "out" / "contraction.csv");
    std::string first((std::istreambuf_iterator<char>(is1)), std::istreambuf_iterator<char>());
    CHECK(run({"picard", "-c", cfg}) == 0);
    std::ifstream is2(tmp.path / "out" / "contraction.csv");
    std::string second((std::istreambuf_iterator<char>(is2)), std::istreambuf_iterator<char>());
    CHECK(first == second);
    CHECK(first.find("iter,y_norm,diff_norm,ratio") == 0);
}

TEST_CASE("cli: simulate then decay-fit round trip on stored snapshots") {
    TempDir tmp("ellab_cli_fit");
    const std::string out = (tmp.path / "out").string();
    // linear-regime bump on a moderate box; snapshots every 0.5 up to t = 6
    const std::string cfg = write_config(tmp.path,
                                         "resolution = 16\n"
                                         "box_len = 12.566370614359172\n"
                                         "scenario = bump\n"
                                         "epsilon = 1e-4\n"
                                         "dt = 0.025\n"
                                         "t_end = 6.0\n"
                                         "snapshot_every = 20\n"
                                         "output_dir = " + out + "\n");
    CHECK(run({"simulate", "-c", cfg}) == 0);
    CHECK(run({"decay-fit", "-c", cfg}) == 0);
    CHECK(fs::exists(tmp.path / "out" / "decay.csv"));
    std::ifstream is(tmp.path / "out" / "decay.csv");
    std::string header;
    std::getline(is, header);
    CHECK(header == "field,j,slope,intercept,max_residual,target,window_lo,window_hi");
    int rows = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 4);

    CHECK(run({"report", "-c", cfg}) == 0);
    CHECK(fs::exists(tmp.path / "out" / "report.csv"));
}
