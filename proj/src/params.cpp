#include "iup/params.hpp"

#include "iup/errors.hpp"

#include <cmath>
#include <sstream>

namespace iup {

namespace {

[[noreturn]] void fail(const char* invariant, const std::string& detail) {
    std::ostringstream msg;
    msg << invariant << ": " << detail;
    throw ValidationError(msg.str());
}

void require_positive(double value, const char* invariant) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        fail(invariant, "value must be positive and finite, got " + std::to_string(value));
    }
}

} // namespace

SetupParams validate(const SetupParams& p) {
    require_positive(p.lambda_p, "pump_wavelength_positive");
    require_positive(p.lambda_s, "signal_wavelength_positive");
    require_positive(p.lambda_i, "idler_wavelength_positive");
    require_positive(p.crystal_length, "crystal_length_positive");
    require_positive(p.delta_omega_s, "signal_bandwidth_positive");
    require_positive(p.n_hs, "index_n_hs_positive");
    require_positive(p.n_vs, "index_n_vs_positive");
    require_positive(p.n_i, "index_n_i_positive");

    const double inv_p = 1.0 / p.lambda_p;
    const double inv_sum = 1.0 / p.lambda_s + 1.0 / p.lambda_i;
    if (std::abs(inv_p - inv_sum) > 1e-9 * inv_p) {
        std::ostringstream detail;
        detail.precision(17);
        detail << "1/lambda_p = " << inv_p << " but 1/lambda_s + 1/lambda_i = " << inv_sum
               << " (pair generation requires them equal to 1e-9 relative)";
        fail("energy_conservation", detail.str());
    }

    if (!(p.xi_a >= 0.0) || !(p.xi_a <= 0.2)) {
        fail("gain_a_low_gain_range", "xi_a must lie in [0, 0.2], got " + std::to_string(p.xi_a));
    }
    if (!(p.xi_b >= 0.0) || !(p.xi_b <= 0.2)) {
        fail("gain_b_low_gain_range", "xi_b must lie in [0, 0.2], got " + std::to_string(p.xi_b));
    }
    if (!(p.transmission >= 0.0) || !(p.transmission <= 1.0)) {
        fail("transmission_range", "T must lie in [0, 1], got " + std::to_string(p.transmission));
    }
    if (!std::isfinite(p.theta1) || !std::isfinite(p.theta2)) {
        fail("angles_finite", "theta1 and theta2 must be finite");
    }
    if (!std::isfinite(p.dx)) {
        fail("dx_finite", "idler displacement must be finite");
    }
    if (!std::isfinite(p.bbo_extra_path)) {
        fail("bbo_extra_path_finite", "extra V-signal path must be finite");
    }
    return p;
}

double DerivedQuantities::index_of(Mode m) const {
    switch (m) {
        case Mode::signal_h: return n_hs;
        case Mode::signal_v: return n_vs;
        case Mode::idler: return n_i;
    }
    return 0.0;
}

double DerivedQuantities::wavelength_of(Mode m) const {
    return m == Mode::idler ? lambda_i : lambda_s;
}

double DerivedQuantities::delta_l(Mode a, Mode b) const {
    return crystal_length * (index_of(a) - index_of(b));
}

double DerivedQuantities::phi(Mode m) const {
    double cycles = crystal_length * index_of(m) / wavelength_of(m);
    if (m == Mode::signal_v) {
        cycles += bbo_extra_path / lambda_s;
    }
    return cycles;
}

DerivedQuantities derived(const SetupParams& p) {
    DerivedQuantities d;
    d.l_coh = speed_of_light / p.delta_omega_s;
    d.crystal_length = p.crystal_length;
    d.n_hs = p.n_hs;
    d.n_vs = p.n_vs;
    d.n_i = p.n_i;
    d.lambda_s = p.lambda_s;
    d.lambda_i = p.lambda_i;
    d.bbo_extra_path = p.bbo_extra_path;
    return d;
}

double StepperModel::deviation(int k) const {
    switch (kind) {
        case Deviation::none:
            return 0.0;
        case Deviation::sinusoid:
            return sinusoid_amplitude * std::sin(two_pi * k / sinusoid_period_steps);
    }
    return 0.0;
}

StepperModel validate(const StepperModel& s) {
    if (!(s.nominal_step > 0.0)) {
        fail("stepper_step_positive", "nominal_step must be > 0");
    }
    if (!(s.deviation_bound >= 0.0)) {
        fail("stepper_bound_nonnegative", "deviation_bound must be >= 0");
    }
    if (s.kind == StepperModel::Deviation::sinusoid) {
        if (!(s.sinusoid_period_steps > 0.0)) {
            fail("stepper_period_positive", "sinusoid_period_steps must be > 0");
        }
        if (std::abs(s.sinusoid_amplitude) > s.deviation_bound) {
            fail("stepper_deviation_bound",
                 "sinusoid amplitude exceeds the stage repeatability bound");
        }
    }
    return s;
}

} // namespace iup
