#pragma once

// Truncated single-pair state at a fixed signal frequency and its
// propagation through the optical elements of the interferometer. The basis
// is {vacuum, |1_Hs 1_Hi>, |1_Vs 1_Hi>, |1_Hs 1_b>, |1_Vs 1_b>} where b is
// the environment port of the idler loss beamsplitter. Amplitudes are kept
// to first order in the gains: the vacuum amplitude stays at 1 and pair
// amplitudes are O(xi).

#include "iup/params.hpp"

#include <complex>
#include <variant>
#include <vector>

namespace iup::oracle {

using Amplitude = std::complex<double>;

struct PairState {
    Amplitude vacuum = 1.0;
    Amplitude hs_hi = 0.0; // |1,0,1,0>
    Amplitude vs_hi = 0.0; // |0,1,1,0>
    Amplitude hs_b = 0.0;  // |1,0,0,1>
    Amplitude vs_b = 0.0;  // |0,1,0,1>

    // Total pair probability (vacuum excluded).
    double pair_probability() const;
};

// Optical elements in their canonical order. Frequency-dependent phases are
// computed at application time from (omega_s, omega_i).
struct SpdcA { double xi; };
struct IdlerDelay { double dx; };
struct LossBeamsplitter { double beta; }; // T = cos^2(beta)
struct DoubledQwp { double theta1; };     // double-passed QWP = single-pass HWP action
struct SpdcB {
    double xi;
    double crystal_length;
    double n_hs, n_vs, n_i;
};
struct BboPath { double delta_v; };
struct OutputHwp { double theta2; };

using ElementStep =
    std::variant<SpdcA, IdlerDelay, LossBeamsplitter, DoubledQwp, SpdcB, BboPath, OutputHwp>;

// The fixed element order of the setup; gains are passed explicitly so the
// spectral envelope can be applied by the caller.
std::vector<ElementStep> canonical_elements(const SetupParams& params, double xi_a, double xi_b);

void apply_element(PairState& state, const ElementStep& step, double omega_s, double omega_i);

} // namespace iup::oracle
