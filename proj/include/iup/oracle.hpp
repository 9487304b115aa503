#pragma once

// Brute-force ground-truth engine: propagates the truncated pair state
// through each optical element at fixed signal frequency, then integrates
// the detector expectation over the Gaussian SPDC spectrum numerically.
// Serves as the independent check on the closed-form expression.

#include "iup/pair_state.hpp"
#include "iup/quadrature.hpp"

namespace iup::oracle {

// Gaussian spectral gain density: xi_j^2(omega_s) integrates to xi_j0^2
// over the signal band centered at omega_s0 = 2 pi c / lambda_s.
double gain_density(const SetupParams& params, double omega_s);

// State after the full element chain, with gains carrying the spectral
// envelope sqrt(gain_density). Rejects nonphysical frequencies
// (omega_s <= 0 or omega_s >= omega_p).
PairState propagate_state(const SetupParams& params, double omega_s);

// Spectral density of the H-polarized signal photon number at the detector:
// |amp(1_Hs 1_Hi)|^2 + |amp(1_Hs 1_b)|^2.
double detector_expectation_monochromatic(const SetupParams& params, double omega_s);

// Integral of the detector expectation over the signal spectrum. Checks
// convergence by doubling the node count and throws ConvergenceError when
// the two results differ by more than 1e-9 relative.
double integrate_over_frequency(const SetupParams& params, const QuadratureSpec& quad);

} // namespace iup::oracle
