#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ellab/estimates.hpp"
#include "ellab/ops.hpp"
#include "ellab/timestepper.hpp"
#include "test_support.hpp"

using namespace ellab;
using namespace ellab::test;

namespace {

const double kPi = M_PI;

FieldSeries constant_series(const SpectralField& f, double T, int n, double s) {
    return FieldSeries{std::vector<SpectralField>(static_cast<std::size_t>(n) + 1, f), T / n, s};
}

} // namespace

TEST_CASE("embedding constant bounds every grid field and is sharp") {
    Grid g(3, 16, 2 * kPi);
    const double c = embedding_constant(g, 1.6);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto f = random_low_mode_field(g, 1, 5.0, seed);
        CHECK(lp_norm(f, Lp::inf) <= c * sobolev_norm(f, 1.6) * (1 + 1e-12));
    }
    // the extremal field fhat_k = (1+|k|^2)^{-1.6} attains it
    SpectralField ext(g, 1);
    int m[3];
    for (std::size_t i = 0; i < g.total(); ++i) {
        g.decode(i, m);
        double k2 = 0.0;
        for (int a = 0; a < 3; ++a) {
            const double k = g.wavenumber(m[a]);
            k2 += k * k;
        }
        ext.comp(0)[i] = Complex(std::pow(1.0 + k2, -1.6), 0.0);
    }
    CHECK(lp_norm(ext, Lp::inf) == doctest::Approx(c * sobolev_norm(ext, 1.6)).epsilon(1e-10));
}

TEST_CASE("bil.e.1: trivial margins") {
    Grid g(3, 16, 2 * kPi);
    const double T = 0.5, s = 0.6;
    auto zero = constant_series(SpectralField(g, 3), T, 8, s);
    auto w = constant_series(random_low_mode_field(g, 3, 4.0, 2), T, 8, s);
    auto rec = check_bilinear_L1L1(zero, w, T);
    CHECK(rec.lhs == 0.0);
    CHECK(rec.margin == 0.0);  // rhs also vanishes: ||z||_X = 0

    // w constant in space: grad w = 0, lhs = 0, margin = rhs > 0
    auto cfield = scalar_field(g, [](const double*) { return 2.0; });
    SpectralField cvec(g, 3);
    for (int c = 0; c < 3; ++c)
        std::copy(cfield.comp(0).begin(), cfield.comp(0).end(), cvec.comp(c).begin());
    auto z = constant_series(random_low_mode_field(g, 3, 4.0, 3), T, 8, s);
    auto rec2 = check_bilinear_L1L1(z, constant_series(cvec, T, 8, s), T);
    CHECK(rec2.lhs == 0.0);
    CHECK(rec2.rhs > 0.0);
    CHECK(rec2.margin == rec2.rhs);

    FieldSeries short_series{std::vector<SpectralField>(3, SpectralField(g, 3)), T / 2, s};
    CHECK_THROWS_AS(check_bilinear_L1L1(z, short_series, T), std::invalid_argument);
}

TEST_CASE("Leib.2: constant factor and closed-form sin product") {
    Grid g(3, 16, 2 * kPi);
    const double T = 0.5, s = 0.6;
    auto one = scalar_field(g, [](const double*) { return 1.0; });
    auto f = scalar_field(g, [](const double* x) { return std::sin(x[0]); });

    // g == 1: ||f * 1||_{H^s} = ||f||_{H^s} <= bracket
    auto rec = check_bilinear_product_Hs(constant_series(f, T, 8, s), constant_series(one, T, 8, s));
    CHECK(rec.lhs == doctest::Approx(sobolev_norm(f, s)).epsilon(1e-12));
    CHECK(rec.margin > 0.0);

    // f = g = sin(x1): product is (1 - cos 2x1)/2, every norm in closed form
    auto rec2 = check_bilinear_product_Hs(constant_series(f, T, 8, s), constant_series(f, T, 8, s));
    const double vol = std::pow(2 * kPi, 3);
    const double lhs_expect = std::sqrt(vol * (0.25 + 2.0 * std::pow(5.0, s) * 0.0625));
    const double bracket = 2.0 * sobolev_norm(f, s + 1.0) * sobolev_norm(f, s);
    CHECK(rec2.lhs == doctest::Approx(lhs_expect).epsilon(1e-12));
    CHECK(rec2.rhs == doctest::Approx(bracket).epsilon(1e-12));
}

TEST_CASE("tril.e.1: zero factor, constant closed form, and a positive-margin suite") {
    Grid g(3, 16, 2 * kPi);
    const double T = 0.5, s = 0.6;
    auto ones = scalar_field(g, [](const double*) { return 1.0; });
    SpectralField onev(g, 3);
    std::copy(ones.comp(0).begin(), ones.comp(0).end(), onev.comp(0).begin());

    auto zero = constant_series(SpectralField(g, 3), T, 8, s);
    auto w = constant_series(random_low_mode_field(g, 3, 4.0, 5), T, 8, s);
    auto h = constant_series(random_low_mode_field(g, 3, 4.0, 6), T, 8, s + 1.0);
    CHECK(check_trilinear(zero, w, h, T).lhs == 0.0);

    // all factors the constant e1-field: lhs = T L^N exactly
    auto cz = constant_series(onev, T, 8, s);
    auto ch = constant_series(onev, T, 8, s + 1.0);
    auto rec = check_trilinear(cz, cz, ch, T);
    CHECK(rec.lhs == doctest::Approx(T * g.volume()).epsilon(1e-12));
    CHECK(rec.margin >= 0.0);
}

TEST_CASE("sm.es.hom.1: single-mode closed form and the factor-2 bound") {
    Grid g(3, 16, 2 * kPi);
    const double s = 0.6, T = 1.0;
    auto f = scalar_field(g, [](const double* x) { return std::sin(x[0]); });
    auto rec = check_smoothing(f, s, T, Generator::heat, 128);
    // per mode |k| = 1: sup term = ||f||_2, integral term = (1 - e^{-2T})/2
    const double l2 = lp_norm(f, Lp::two);
    const double expect = l2 + l2 * std::sqrt(0.5 * (1.0 - std::exp(-2.0 * T)));
    CHECK(rec.lhs == doctest::Approx(expect).epsilon(1e-3));
    CHECK(rec.rhs == doctest::Approx(2.0 * sobolev_norm(f, s)).epsilon(1e-13));
    CHECK(rec.margin >= 0.0);

    auto zero_rec = check_smoothing(SpectralField(g, 1), s, T, Generator::heat, 16);
    CHECK(zero_rec.lhs == 0.0);
    CHECK(zero_rec.rhs == 0.0);
}

TEST_CASE("constraint_residual: trivial cases are exactly zero") {
    Grid g(3, 16, 2 * kPi);
    EtaVector eta({0.0, 1.0, 0.0});
    Trajectory traj;
    traj.s = 0.6;
    for (int n = 0; n <= 4; ++n)
        traj.states.push_back(SimState{SpectralField(g, 3), SpectralField(g, 3), 0.1 * n});
    for (double phi : constraint_residual(traj, eta)) CHECK(phi <= 1e-12);
}

TEST_CASE("verify suite: 25 seeds pass on a small grid") {
    VerifySuiteConfig cfg;
    cfg.grid = Grid(3, 16, 2 * kPi);
    cfg.n_seeds = 25;
    cfg.n_time = 8;
    cfg.smoothing_n_time = 64;
    auto records = run_verify_suite(cfg);
    CHECK(records.size() == 100);
    int leib = 0;
    for (const auto& sr : records) {
        CHECK(record_passes(sr.record));
        if (sr.record.name == "Leib.2") {
            ++leib;
            CHECK(sr.record.lhs <= 10.0 * sr.record.rhs);  // sanity: C stays O(1)
        }
    }
    CHECK(leib == 25);

    // determinism of the parallel merge
    auto again = run_verify_suite(cfg);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].seed == again[i].seed);
        CHECK(records[i].record.lhs == again[i].record.lhs);
        CHECK(records[i].record.inputs_digest == again[i].record.inputs_digest);
    }
}

TEST_CASE("smoothing bound survives the stokes generator") {
    Grid g(3, 16, 2 * kPi);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto w0 = random_low_mode_field(g, 3, 4.0, 900 + seed);
        auto rec = check_smoothing(w0, 0.6, 0.5, Generator::stokes, 64);
        CHECK(rec.margin >= -1e-8 * rec.rhs);
    }
}
