#pragma once

// Analytic photon-number expectation at the signal detector, evaluated per
// term. The expression is the frequency-integrated low-gain result: three
// non-interfering intensity terms, one dx-independent self-interference term
// between the H and V signal components, and two dx-dependent cross terms
// (H signal x pass B, V signal x pass B) carrying Gaussian coherence
// envelopes.

#include "iup/params.hpp"

namespace iup::closed_form {

// Sign of the idler crystal phase inside the two cross-term cosines.
// `positive` follows the state-propagation derivation and is the default;
// `negative` is retained as a diagnostic variant (the selftest shows it
// disagreeing with the state-propagation engine).
enum class IdlerPhaseSign { positive, negative };

struct TermBreakdown {
    double pass_b_intensity = 0.0;   // xi_b^2 cos^2(theta2)
    double pass_a_h_intensity = 0.0; // xi_a^2 cos^2(theta1) cos^2(theta2)
    double pass_a_v_intensity = 0.0; // xi_a^2 sin^2(theta1) sin^2(theta2)
    double self_interference = 0.0;  // dx-independent H_s/V_s term
    double cross_h = 0.0;            // H_s x pass-B term, envelope at delta_l(H_s, idler)
    double cross_v = 0.0;            // V_s x pass-B term, envelope at delta_l(V_s, idler)
    double total = 0.0;              // sum of the six terms

    double sum_of_terms() const {
        return pass_b_intensity + pass_a_h_intensity + pass_a_v_intensity +
               self_interference + cross_h + cross_v;
    }
};

TermBreakdown term_breakdown(const SetupParams& params,
                             IdlerPhaseSign sign = IdlerPhaseSign::positive);

// Detector photon-number expectation per mode. Nonnegative for every valid
// low-gain parameter set.
double expected_counts(const SetupParams& params,
                       IdlerPhaseSign sign = IdlerPhaseSign::positive);

} // namespace iup::closed_form
