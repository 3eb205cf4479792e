#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ellab/mild_solver.hpp"
#include "ellab/ops.hpp"
#include "ellab/timestepper.hpp"
#include "test_support.hpp"

using namespace ellab;
using namespace ellab::test;

namespace {
const double kPi = M_PI;
}

TEST_CASE("zero state is exactly stationary") {
    Grid g(3, 16, 2 * kPi);
    EtaVector eta({0.4, 0.0, 0.6});
    StepConfig cfg;
    cfg.dt = 0.05;
    cfg.t_end = 0.5;
    auto traj = integrate(FlowData{SpectralField(g, 3)}, DirectorData{SpectralField(g, 3), eta},
                          eta, cfg);
    for (const auto& st : traj.states) {
        CHECK(lp_norm(st.u, Lp::two) == 0.0);
        CHECK(lp_norm(st.d, Lp::two) == 0.0);
    }
}

TEST_CASE("pure heat mode amplification matches the scheme's scalar recurrence") {
    Grid g(3, 16, 2 * kPi);
    EtaVector eta({0.0, 0.0, 1.0});
    auto mode = vector_field(g, 3, [](int c, const double* x) { return c == 0 ? std::sin(x[1]) : 0.0; });
    SimState st{mode, SpectralField(g, 3), 0.0};

    StepConfig imex;
    imex.dt = 0.2;
    imex.t_end = 0.2;
    imex.linear_only = true;
    auto s1 = step(st, eta, imex);
    CHECK(max_abs_diff(s1.u, (1.0 / 1.2) * mode) < 1e-14);

    StepConfig ifac = imex;
    ifac.scheme = Scheme::integrating_factor_euler;
    auto s2 = step(st, eta, ifac);
    CHECK(max_abs_diff(s2.u, std::exp(-0.2) * mode) < 1e-14);
}

TEST_CASE("linear stability: L2 of u and H1 of d are non-increasing for any dt") {
    Grid g(3, 16, 2 * kPi);
    EtaVector eta({0.0, 0.0, 1.0});
    auto u = leray_project(random_low_mode_field(g, 3, 4.0, 3));
    auto d = random_low_mode_field(g, 3, 4.0, 4);
    for (double dt : {1e-3, 0.5, 50.0}) {
        StepConfig cfg;
        cfg.dt = dt;
        cfg.t_end = dt;
        cfg.linear_only = true;
        SimState st{u, d, 0.0};
        for (int n = 0; n < 5; ++n) {
            auto nx = step(st, eta, cfg);
            CHECK(lp_norm(nx.u, Lp::two) <= lp_norm(st.u, Lp::two) * (1 + 1e-14));
            CHECK(sobolev_norm(nx.d, 1.0) <= sobolev_norm(st.d, 1.0) * (1 + 1e-14));
            st = std::move(nx);
        }
    }
}

TEST_CASE("linear-regime data follows the pure semigroup flow") {
    Grid g(3, 16, 2 * kPi);
    EtaVector eta({0.0, 0.0, 1.0});
    const double eps = 1e-6;
    auto [flow, dir] = small_data_family(eps, 9, g, eta, 0.6);
    StepConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.2;
    cfg.scheme = Scheme::integrating_factor_euler;  // exact linear part
    cfg.snapshot_every = 50;
    auto traj = integrate(flow, dir, eta, cfg);
    const SpectralField pu0 = leray_project(flow.u0);
    for (const auto& st : traj.states) {
        const double drift_u = lp_norm(st.u - heat_multiplier(pu0, st.t), Lp::two);
        const double drift_d = lp_norm(st.d - heat_multiplier(dir.d0, st.t), Lp::two);
        CHECK(drift_u <= 10.0 * eps * eps * (st.t + cfg.dt));
        CHECK(drift_d <= 10.0 * eps * eps * (st.t + cfg.dt));
    }
}

TEST_CASE("dt refinement halves the terminal error (first order)") {
    Grid g(3, 16, 2 * kPi);
    EtaVector eta({0.0, 0.0, 1.0});
    auto [flow, dir] = small_data_family(0.05, 21, g, eta, 0.6);
    const double T = 0.2;
    SpectralField u_end[3] = {SpectralField(g, 3), SpectralField(g, 3), SpectralField(g, 3)};
    int idx = 0;
    for (double dt : {4e-3, 2e-3, 1e-3}) {
        StepConfig cfg;
        cfg.dt = dt;
        cfg.t_end = T;
        cfg.snapshot_every = static_cast<int>(std::lround(T / dt));
        auto traj = integrate(flow, dir, eta, cfg);
        u_end[idx++] = traj.states.back().u;
    }
    const double e1 = lp_norm(u_end[0] - u_end[1], Lp::two);
    const double e2 = lp_norm(u_end[1] - u_end[2], Lp::two);
    REQUIRE(e2 > 0.0);
    CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.25));
}

TEST_CASE("energy dissipates along a small-data run") {
    Grid g(3, 16, 2 * kPi);
    EtaVector eta({0.0, 0.0, 1.0});
    auto [flow, dir] = small_data_family(1e-2, 13, g, eta, 0.6);
    StepConfig cfg;
    cfg.dt = 2e-3;
    cfg.t_end = 0.25;
    const double e0 = energy(SimState{flow.u0, dir.d0, 0.0});
    double prev = e0;
    bool ok = true;
    integrate(flow, dir, eta, cfg, 0.6, nullptr, false, [&](const SimState& st) {
        const double e = energy(st);
        if (e > prev + 1e-8 * e0) ok = false;
        prev = e;
    });
    CHECK(ok);
}

TEST_CASE("divergence-free preservation along snapshots") {
    Grid g(3, 16, 2 * kPi);
    EtaVector eta({0.0, 0.0, 1.0});
    auto [flow, dir] = small_data_family(0.05, 17, g, eta, 0.6);
    StepConfig cfg;
    cfg.dt = 5e-3;
    cfg.t_end = 0.2;
    cfg.snapshot_every = 8;
    auto traj = integrate(flow, dir, eta, cfg);
    for (const auto& st : traj.states)
        CHECK(divergence_l2(st.u) <= 1e-10 * (1.0 + sobolev_norm(st.u, 1.0)));
}

TEST_CASE("non-finite coefficients raise Blowup with the offending time") {
    Grid g(3, 16, 2 * kPi);
    EtaVector eta({0.0, 0.0, 1.0});
    // huge generic field: the quadratic self-advection overflows immediately
    auto u = leray_project(random_low_mode_field(g, 3, 3.0, 8));
    u *= 1e180 / lp_norm(u, Lp::inf);
    SpectralField d(g, 3);
    StepConfig cfg;
    cfg.dt = 0.1;
    cfg.t_end = 1.0;
    bool thrown = false;
    try {
        integrate(FlowData{u}, DirectorData{d, eta}, eta, cfg);
    } catch (const BlowupError& e) {
        thrown = true;
        CHECK(e.time == doctest::Approx(0.1));
        REQUIRE(e.partial != nullptr);
        CHECK(e.partial->states.size() == 1);  // only t = 0 was recorded
    }
    CHECK(thrown);
}

TEST_CASE("integrate validates the time grid") {
    Grid g(3, 16, 2 * kPi);
    EtaVector eta({0.0, 0.0, 1.0});
    StepConfig cfg;
    cfg.dt = 0.3;
    cfg.t_end = 1.0;  // not a multiple
    CHECK_THROWS_AS(integrate(FlowData{SpectralField(g, 3)},
                              DirectorData{SpectralField(g, 3), eta}, eta, cfg),
                    std::invalid_argument);
}

TEST_CASE("picard and imex agree to first order in dt") {
    Grid g(3, 16, 2 * kPi);
    EtaVector eta({0.0, 0.0, 1.0});
    auto [flow, dir] = small_data_family(1e-3, 29, g, eta, 0.6);
    const double T = 0.1;

    PicardConfig pcfg;
    pcfg.T = T;
    pcfg.n_time = 64;
    pcfg.tol = 1e-13;
    auto ref = picard_solve(flow, dir, eta, pcfg).trajectory.states.back().u;

    double err[3];
    int idx = 0;
    for (double dt : {2e-3, 1e-3, 5e-4}) {
        StepConfig cfg;
        cfg.dt = dt;
        cfg.t_end = T;
        cfg.snapshot_every = static_cast<int>(std::lround(T / dt));
        auto traj = integrate(flow, dir, eta, cfg);
        err[idx++] = lp_norm(traj.states.back().u - ref, Lp::two);
    }
    const double order1 = std::log2(err[0] / err[1]);
    const double order2 = std::log2(err[1] / err[2]);
    CHECK(0.5 * (order1 + order2) == doctest::Approx(1.0).epsilon(0.3));
}
