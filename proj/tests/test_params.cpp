#include <doctest.h>

#include "iup/errors.hpp"
#include "iup/params.hpp"

#include <cmath>
#include <random>

using namespace iup;

TEST_CASE("energy conservation accepts the pair-matched idler wavelength") {
    SetupParams p;
    p.lambda_p = 1064e-9;
    p.lambda_s = 1550e-9;
    // Independent arithmetic: 1/lambda_i = 1/lambda_p - 1/lambda_s.
    const double lambda_i = (1064e-9 * 1550e-9) / (1550e-9 - 1064e-9);
    CHECK(lambda_i == doctest::Approx(3.3934156378600823e-06).epsilon(1e-15));
    p.lambda_i = lambda_i;
    CHECK_NOTHROW(validate(p));
    CHECK(energy_conserving_lambda_i(p.lambda_p, p.lambda_s) ==
          doctest::Approx(lambda_i).epsilon(1e-15));
}

TEST_CASE("energy conservation rejects the rounded 3.4 um idler") {
    SetupParams p;
    p.lambda_p = 1064e-9;
    p.lambda_s = 1550e-9;
    p.lambda_i = 3.4e-6;
    CHECK_THROWS_AS(validate(p), ValidationError);
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("energy_conservation"), ValidationError);
}

TEST_CASE("gain outside the low-gain range is rejected by name") {
    SetupParams p;
    p.xi_a = 0.5;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("gain_a_low_gain_range"), ValidationError);
    p.xi_a = 0.1;
    p.xi_b = -0.01;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("gain_b_low_gain_range"), ValidationError);
}

TEST_CASE("range and positivity checks") {
    SetupParams p;
    p.transmission = 1.2;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("transmission_range"), ValidationError);
    p = SetupParams{};
    p.crystal_length = 0.0;
    CHECK_THROWS_AS(validate(p), ValidationError);
    p = SetupParams{};
    p.delta_omega_s = -1.0;
    CHECK_THROWS_AS(validate(p), ValidationError);
    CHECK_NOTHROW(validate(SetupParams{}));
}

TEST_CASE("coherence length is c over the signal bandwidth") {
    SetupParams p;
    p.delta_omega_s = speed_of_light / 0.2e-3;
    CHECK(derived(p).l_coh == doctest::Approx(0.2e-3).epsilon(1e-12));
}

TEST_CASE("path differences follow L * (n_a - n_b)") {
    SetupParams p;
    p.crystal_length = 5e-3;
    p.n_hs = 2.20;
    p.n_vs = 2.13;

    const DerivedQuantities d = derived(p);
    // Direct multiplication oracle: 5 mm * 0.07 = 0.35 mm.
    CHECK(d.delta_l(Mode::signal_h, Mode::signal_v) == doctest::Approx(0.35e-3).epsilon(1e-12));

    p.n_vs = p.n_hs;
    CHECK(derived(p).delta_l(Mode::signal_h, Mode::signal_v) == 0.0);
}

TEST_CASE("derived quantities are pure and antisymmetric") {
    SetupParams p;
    const DerivedQuantities a = derived(p);
    const DerivedQuantities b = derived(p);
    CHECK(a.l_coh == b.l_coh);
    CHECK(a.phi(Mode::signal_v) == b.phi(Mode::signal_v));

    const Mode modes[] = {Mode::signal_h, Mode::signal_v, Mode::idler};
    for (Mode x : modes) {
        CHECK(a.delta_l(x, x) == 0.0);
        for (Mode y : modes) {
            CHECK(a.delta_l(x, y) == -a.delta_l(y, x));
        }
    }
}

TEST_CASE("scaling the crystal length scales every path difference and phase") {
    SetupParams p;
    p.bbo_extra_path = 0.0;
    const double k = 2.5;
    SetupParams scaled = p;
    scaled.crystal_length *= k;

    const DerivedQuantities d0 = derived(p);
    const DerivedQuantities d1 = derived(scaled);
    const Mode modes[] = {Mode::signal_h, Mode::signal_v, Mode::idler};
    for (Mode x : modes) {
        CHECK(d1.phi(x) == doctest::Approx(k * d0.phi(x)).epsilon(1e-14));
        for (Mode y : modes) {
            CHECK(d1.delta_l(x, y) == doctest::Approx(k * d0.delta_l(x, y)).epsilon(1e-14));
        }
    }
}

TEST_CASE("V-signal phase carries the extra BBO path") {
    SetupParams p;
    p.bbo_extra_path = 0.0;
    const double base = derived(p).phi(Mode::signal_v);
    p.bbo_extra_path = 123e-9;
    CHECK(derived(p).phi(Mode::signal_v) ==
          doctest::Approx(base + 123e-9 / p.lambda_s).epsilon(1e-14));
    CHECK(derived(p).phi(Mode::signal_h) == derived(SetupParams{}).phi(Mode::signal_h));
}

TEST_CASE("stepper positions follow the nominal step plus bounded deviation") {
    StepperModel s;
    s.kind = StepperModel::Deviation::none;
    CHECK(validate(s).deviation(0) == 0.0);
    CHECK(s.position(7) == doctest::Approx(7 * s.nominal_step));

    s.kind = StepperModel::Deviation::sinusoid;
    s.sinusoid_amplitude = 3e-6;
    s.sinusoid_period_steps = 40.0;
    validate(s);
    CHECK(s.deviation(0) == 0.0);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> step(0, 5000);
    for (int i = 0; i < 200; ++i) {
        const int k = step(rng);
        CHECK(std::abs(s.deviation(k)) <= s.deviation_bound);
        CHECK(s.position(k) == doctest::Approx(k * s.nominal_step + s.deviation(k)));
    }

    s.sinusoid_amplitude = 4e-6; // exceeds the 3.6 um repeatability bound
    CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("stepper_deviation_bound"),
                         ValidationError);
}
