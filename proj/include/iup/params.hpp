#pragma once

// Physical parameter set of the double-passed SPDC interferometer with a
// polarization quantum-erasure output, plus the quantities derived from it.
// All values are SI (meters, radians, rad/s); angle/length unit conversion
// happens at the config boundary only.

#include "iup/constants.hpp"

namespace iup {

struct SetupParams {
    double xi_a = 0.1;  // gain amplitude of crystal pass A (dimensionless, >= 0)
    double xi_b = 0.1;  // gain amplitude of crystal pass B
    double theta1 = deg_to_rad(30.0); // rotation of the double-passed QWP, rad
    double theta2 = deg_to_rad(45.0); // rotation of the output HWP, rad
    double transmission = 0.25;       // idler-path intensity transmissivity T = cos^2(beta)
    double dx = 0.0;                  // idler mirror path change between passes, m

    double crystal_length = 5e-3;     // L, m
    double lambda_p = 1064e-9;        // pump wavelength, m
    double lambda_s = 1550e-9;        // signal wavelength, m
    // Idler wavelength; must satisfy 1/lambda_p = 1/lambda_s + 1/lambda_i.
    double lambda_i = 3.3934156378600823e-06;

    // Crystal refractive indices: H-polarized signal, V-polarized signal,
    // and the single idler polarization mode.
    double n_hs = 2.13;
    double n_vs = 2.20;
    double n_i = 2.08;

    double delta_omega_s = speed_of_light / 0.2e-3; // SPDC signal bandwidth, rad/s
    double bbo_extra_path = 0.0; // delta_V: extra optical path on the V signal only, m
};

// Idler wavelength forced by energy conservation of the pair process.
constexpr double energy_conserving_lambda_i(double lambda_p, double lambda_s) {
    return 1.0 / (1.0 / lambda_p - 1.0 / lambda_s);
}

// Checks every invariant of the parameter set and returns it unchanged.
// Throws ValidationError naming the first violated invariant. The gain
// bound (xi <= 0.2) keeps the model inside its low-gain domain of validity.
SetupParams validate(const SetupParams& params);

// Optical mode labels used for path-difference and phase accessors.
enum class Mode { signal_h, signal_v, idler };

struct DerivedQuantities {
    double l_coh = 0.0; // coherence length c / delta_omega_s, m

    // Optical path difference L * (n_a - n_b) between two modes, m.
    double delta_l(Mode a, Mode b) const;

    // Accumulated cycle count L * n / lambda for one crystal pass;
    // the V signal additionally carries bbo_extra_path / lambda_s.
    double phi(Mode m) const;

    double index_of(Mode m) const;
    double wavelength_of(Mode m) const;

    double crystal_length = 0.0;
    double n_hs = 0.0, n_vs = 0.0, n_i = 0.0;
    double lambda_s = 0.0, lambda_i = 0.0;
    double bbo_extra_path = 0.0;
};

DerivedQuantities derived(const SetupParams& params);

// Macro translation stage: position k = k * nominal_step + deviation(k).
// The deviation models the stage's departure from linear motion, bounded by
// its unidirectional repeatability.
struct StepperModel {
    enum class Deviation { none, sinusoid };

    double nominal_step = 10e-6;    // commanded macro step size, m
    double deviation_bound = 3.6e-6;
    Deviation kind = Deviation::none;
    double sinusoid_amplitude = 3e-6;
    double sinusoid_period_steps = 40.0;

    double deviation(int k) const;
    double position(int k) const { return k * nominal_step + deviation(k); }
};

// Throws ValidationError if the deviation can exceed deviation_bound or the
// step geometry is degenerate.
StepperModel validate(const StepperModel& stepper);

} // namespace iup
