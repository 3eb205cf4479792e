#include "ellab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include "ellab/diagnostics.hpp"
#include "ellab/digest.hpp"
#include "ellab/elsf.hpp"
#include "ellab/estimates.hpp"
#include "ellab/halfspace.hpp"
#include "ellab/mild_solver.hpp"
#include "ellab/nonlinearity.hpp"
#include "ellab/run_config.hpp"
#include "ellab/semigroup.hpp"

namespace fs = std::filesystem;

namespace ellab {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct ScenarioData {
    FlowData flow;
    DirectorData director;
    EtaVector eta;
};

ScenarioData make_scenario(const RunConfig& cfg) {
    const Grid grid = cfg.grid();
    EtaVector eta(cfg.eta);
    if (!grid.paper_regime())
        std::cerr << "note: dimension 2 is a smoke-test mode outside the analysis hypotheses\n";
    if (cfg.scenario == "zero")
        return {FlowData{SpectralField(grid, grid.dim())},
                DirectorData{SpectralField(grid, grid.dim()), eta}, eta};
    if (cfg.scenario == "bump") {
        auto [flow, dir] = bump_data(cfg.epsilon, grid, eta, cfg.s, /*width=*/0.5);
        return {std::move(flow), std::move(dir), eta};
    }
    auto [flow, dir] = small_data_family(cfg.epsilon, cfg.seed, grid, eta, cfg.s);
    return {std::move(flow), std::move(dir), eta};
}

void write_manifest(const fs::path& dir, const RunConfig& cfg, const ScenarioData& data,
                    double wall_seconds, const std::string& extra = "") {
    std::ofstream os(dir / "manifest.txt");
    os << "# run manifest\n" << cfg.echo();
    os << "u0_digest = " << Digest().field(data.flow.u0).hex() << "\n";
    os << "d0_digest = " << Digest().field(data.director.d0).hex() << "\n";
    os << "wall_seconds = " << fmt(wall_seconds) << "\n";
    if (!extra.empty()) os << extra;
}

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_simulate(const RunConfig& cfg) {
    Stopwatch watch;
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    ScenarioData data = make_scenario(cfg);

    StepConfig step_cfg;
    step_cfg.dt = cfg.dt;
    step_cfg.t_end = cfg.t_end;
    step_cfg.snapshot_every = cfg.snapshot_every;
    step_cfg.scheme = cfg.scheme();
    step_cfg.dealias_state = cfg.dealias;

    std::ofstream energy_csv(dir / "energy.csv");
    energy_csv << "t,energy\n";
    int snap_index = 0;
    auto sink = [&](const SimState& st, const SpectralField& pressure) {
        char name[32];
        std::snprintf(name, sizeof(name), "u_%06d.elsf", snap_index);
        write_elsf((dir / name).string(), st.u, st.t);
        std::snprintf(name, sizeof(name), "d_%06d.elsf", snap_index);
        write_elsf((dir / name).string(), st.d, st.t);
        std::snprintf(name, sizeof(name), "p_%06d.elsf", snap_index);
        write_elsf((dir / name).string(), pressure, st.t);
        ++snap_index;
    };
    auto observer = [&](const SimState& st) {
        energy_csv << fmt(st.t) << "," << fmt(energy(st)) << "\n";
    };

    try {
        integrate(data.flow, data.director, data.eta, step_cfg, cfg.s, sink,
                  /*keep_states=*/false, observer);
    } catch (const BlowupError& e) {
        std::cerr << "blowup at t = " << e.time << "\n";
        write_manifest(dir, cfg, data, watch.seconds(),
                       "blowup_time = " + fmt(e.time) + "\n");
        return 3;
    }
    write_manifest(dir, cfg, data, watch.seconds(),
                   "snapshots = " + std::to_string(snap_index) + "\n");
    return 0;
}

void write_contraction_csv(const fs::path& path, const ContractionReport& rep) {
    std::ofstream os(path);
    os << "iter,y_norm,diff_norm,ratio\n";
    for (std::size_t i = 0; i < rep.iterate_norms.size(); ++i) {
        os << i << "," << fmt(rep.iterate_norms[i]) << ",";
        os << (i >= 1 && i - 1 < rep.diff_norms.size() ? fmt(rep.diff_norms[i - 1]) : "");
        os << ",";
        os << (i >= 2 && i - 2 < rep.ratios.size() ? fmt(rep.ratios[i - 2]) : "");
        os << "\n";
    }
}

int cmd_picard(const RunConfig& cfg) {
    Stopwatch watch;
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    ScenarioData data = make_scenario(cfg);

    PicardConfig pcfg;
    pcfg.T = cfg.t_end;
    pcfg.n_time = static_cast<int>(std::lround(cfg.t_end / cfg.dt));
    pcfg.s = cfg.s;
    if (cfg.dimension == 3 && (cfg.s <= 0.5 || cfg.s > 1.0))
        std::cerr << "note: s = " << cfg.s
                  << " is outside (1/2, 1], the half-space analogue range\n";

    try {
        auto result = picard_solve(data.flow, data.director, data.eta, pcfg);
        write_contraction_csv(dir / "contraction.csv", result.report);
        write_elsf((dir / "picard_u_final.elsf").string(), result.trajectory.states.back().u,
                   result.trajectory.states.back().t);
        write_elsf((dir / "picard_d_final.elsf").string(), result.trajectory.states.back().d,
                   result.trajectory.states.back().t);
        write_manifest(dir, cfg, data, watch.seconds(),
                       std::string("converged = ") +
                           (result.report.converged ? "true" : "false") + "\n");
        return result.report.converged ? 0 : 2;
    } catch (const NonContractionError& e) {
        write_contraction_csv(dir / "contraction.csv", e.report);
        write_manifest(dir, cfg, data, watch.seconds(), "converged = false\n");
        std::cerr << "picard iteration did not contract; horizon too large for the data\n";
        return 3;
    }
}

int cmd_semigroup_lab(const RunConfig& cfg) {
    Stopwatch watch;
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    const Grid grid = cfg.grid();
    if (!grid.paper_regime())
        std::cerr << "note: dimension 2 is a smoke-test mode outside the analysis hypotheses\n";

    const double cap = decay_window_cap(grid);
    const double fit_lo = 2.0;
    const auto times = log_spaced_times(1.0, cap, 24);
    const double a = 0.05;
    const SpectralField bump = gaussian_bump(grid, a);

    struct Job {
        int p, q_label, j;
        Lp q;
    };
    const std::vector<Job> jobs = {{1, 2, 0, Lp::two}, {1, 0, 0, Lp::inf}, {1, 0, 1, Lp::inf}};

    std::vector<std::future<DecaySeries>> futures;
    for (const Job& job : jobs)
        futures.push_back(std::async(std::launch::async, [&, job] {
            return heat_decay_series(bump, job.p, job.q, job.j, times);
        }));

    std::ofstream series_csv(dir / "series.csv");
    series_csv << "t,norm,p,q,j,domain,slope_window_lo,slope_window_hi\n";
    std::ofstream fits_csv(dir / "fits.csv");
    fits_csv << "domain,p,q,j,slope,intercept,max_residual,target,window_lo,window_hi\n";

    for (std::size_t jidx = 0; jidx < jobs.size(); ++jidx) {
        DecaySeries series = futures[jidx].get();
        const Job& job = jobs[jidx];
        const std::string qs = job.q_label == 0 ? "inf" : std::to_string(job.q_label);
        for (std::size_t i = 0; i < series.times.size(); ++i)
            series_csv << fmt(series.times[i]) << "," << fmt(series.norms[i]) << "," << job.p
                       << "," << qs << "," << job.j << ",torus," << fmt(fit_lo) << ","
                       << fmt(cap) << "\n";
        const auto fit = decay_fit(series, fit_lo, cap);
        const double inv_q = job.q_label == 0 ? 0.0 : 1.0 / job.q_label;
        const double target = -0.5 * grid.dim() * (1.0 - inv_q) - 0.5 * job.j;
        fits_csv << "torus," << job.p << "," << qs << "," << job.j << "," << fmt(fit.slope) << ","
                 << fmt(fit.intercept) << "," << fmt(fit.max_residual) << "," << fmt(target) << ","
                 << fmt(fit_lo) << "," << fmt(cap) << "\n";
    }

    if (grid.dim() == 3) {
        // linear half-space flow: Neumann heat of a bump centered in the slab
        SpectralField shifted = bump;
        int m[3];
        for (std::size_t i = 0; i < grid.total(); ++i) {
            grid.decode(i, m);
            const double kN = grid.wavenumber(m[2]);
            shifted.comp(0)[i] *= std::polar(1.0, kN * grid.box_len() / 4.0);
        }
        const auto full = inverse_transform(shifted);
        const auto hs = restrict_to_slab(grid, HalfSpaceBc::neumann, full);
        DecaySeries series;
        for (double t : times) {
            series.times.push_back(t);
            series.norms.push_back(halfspace_propagate(hs, t).sup_norm());
        }
        for (std::size_t i = 0; i < series.times.size(); ++i)
            series_csv << fmt(series.times[i]) << "," << fmt(series.norms[i])
                       << ",1,inf,0,halfspace-neumann," << fmt(fit_lo) << "," << fmt(cap) << "\n";
        const auto fit = decay_fit(series, fit_lo, cap);
        fits_csv << "halfspace-neumann,1,inf,0," << fmt(fit.slope) << "," << fmt(fit.intercept)
                 << "," << fmt(fit.max_residual) << "," << fmt(-1.5) << "," << fmt(fit_lo) << ","
                 << fmt(cap) << "\n";
    }

    std::ofstream manifest(dir / "manifest.txt");
    manifest << "# run manifest\n" << cfg.echo();
    manifest << "bump_digest = " << Digest().field(bump).hex() << "\n";
    manifest << "wall_seconds = " << fmt(watch.seconds()) << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    Stopwatch watch;
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);

    VerifySuiteConfig vcfg;
    vcfg.grid = cfg.grid();
    vcfg.s = cfg.s;
    vcfg.n_seeds = 100;
    vcfg.base_seed = cfg.seed;
    const auto records = run_verify_suite(vcfg);

    const std::string gdigest = grid_digest(vcfg.grid);
    std::ofstream csv(dir / "verify.csv");
    csv << "name,seed,lhs,rhs,margin,grid_digest\n";
    bool all_pass = true;
    for (const auto& sr : records) {
        csv << sr.record.name << "," << sr.seed << "," << fmt(sr.record.lhs) << ","
            << fmt(sr.record.rhs) << "," << fmt(sr.record.margin) << "," << gdigest << "\n";
        if (!record_passes(sr.record)) all_pass = false;
    }
    std::ofstream manifest(dir / "manifest.txt");
    manifest << "# run manifest\n" << cfg.echo();
    manifest << "records = " << records.size() << "\n";
    manifest << "wall_seconds = " << fmt(watch.seconds()) << "\n";
    if (!all_pass) std::cerr << "verify: margin assertion failed; see verify.csv\n";
    return all_pass ? 0 : 2;
}

int cmd_decay_fit(const RunConfig& cfg) {
    const fs::path dir(cfg.output_dir);
    if (!fs::is_directory(dir)) throw ConfigError("output_dir does not exist: " + cfg.output_dir);

    std::vector<fs::path> u_files, d_files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("u_", 0) == 0 && entry.path().extension() == ".elsf")
            u_files.push_back(entry.path());
        if (name.rfind("d_", 0) == 0 && entry.path().extension() == ".elsf")
            d_files.push_back(entry.path());
    }
    std::sort(u_files.begin(), u_files.end());
    std::sort(d_files.begin(), d_files.end());
    if (u_files.size() != d_files.size() || u_files.size() < 5)
        throw ConfigError("decay-fit: need at least 5 paired u_/d_ snapshots in " + cfg.output_dir);

    DecaySupSeries series;
    Grid grid = cfg.grid();
    for (std::size_t i = 0; i < u_files.size(); ++i) {
        auto u = read_elsf(u_files[i].string());
        auto d = read_elsf(d_files[i].string());
        grid = u.field.grid();
        series.append(SimState{std::move(u.field), std::move(d.field), u.time});
    }

    const double t_max = series.times.back();
    auto result = decay_exponents(series, 1.0, t_max, grid);
    if (result.window_clipped)
        std::cerr << "note: fit window clipped to the validity range [1, L^2/16] = [1, "
                  << decay_window_cap(grid) << "]\n";

    std::ofstream csv(dir / "decay.csv");
    csv << "field,j,slope,intercept,max_residual,target,window_lo,window_hi\n";
    for (int j = 0; j < 2; ++j) {
        csv << "u," << j << "," << fmt(result.u_fit[j].slope) << ","
            << fmt(result.u_fit[j].intercept) << "," << fmt(result.u_fit[j].max_residual) << ","
            << fmt(result.target_u[j]) << "," << fmt(result.window_lo) << ","
            << fmt(result.window_hi) << "\n";
        csv << "d," << j << "," << fmt(result.d_fit[j].slope) << ","
            << fmt(result.d_fit[j].intercept) << "," << fmt(result.d_fit[j].max_residual) << ","
            << fmt(result.target_d[j]) << "," << fmt(result.window_lo) << ","
            << fmt(result.window_hi) << "\n";
    }
    return 0;
}

int cmd_report(const RunConfig& cfg) {
    const fs::path dir(cfg.output_dir);
    if (!fs::is_directory(dir)) throw ConfigError("output_dir does not exist: " + cfg.output_dir);
    std::vector<fs::path> csvs;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".csv" && entry.path().filename() != "report.csv")
            csvs.push_back(entry.path());
    std::sort(csvs.begin(), csvs.end());

    std::ofstream report(dir / "report.csv");
    report << "file,rows,failed_margins\n";
    for (const auto& path : csvs) {
        std::ifstream is(path);
        std::string header, line;
        std::getline(is, header);
        const bool has_margin = header.find("margin") != std::string::npos;
        long rows = 0, failed = 0;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            ++rows;
            if (has_margin) {
                // margin is the 5th column of verify.csv
                std::stringstream ss(line);
                std::string cell, name;
                std::getline(ss, name, ',');
                for (int c = 0; c < 4; ++c) std::getline(ss, cell, ',');
                if (name != "Leib.2" && !cell.empty() && std::stod(cell) < 0.0) ++failed;
            }
        }
        report << path.filename().string() << "," << rows << ","
               << (has_margin ? std::to_string(failed) : "") << "\n";
    }
    return 0;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"pseudospectral Ericksen-Leslie solver and verification lab"};
    app.require_subcommand(1);

    std::string config_path;
    const std::vector<std::string> names = {"simulate",     "picard",    "semigroup-lab",
                                            "verify",       "decay-fit", "report"};
    for (const auto& name : names)
        app.add_subcommand(name)->add_option("-c,--config", config_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        const RunConfig cfg = parse_config(config_path);
        if (app.got_subcommand("simulate")) return cmd_simulate(cfg);
        if (app.got_subcommand("picard")) return cmd_picard(cfg);
        if (app.got_subcommand("semigroup-lab")) return cmd_semigroup_lab(cfg);
        if (app.got_subcommand("verify")) return cmd_verify(cfg);
        if (app.got_subcommand("decay-fit")) return cmd_decay_fit(cfg);
        if (app.got_subcommand("report")) return cmd_report(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace ellab
