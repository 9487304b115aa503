#include "iup/closed_form.hpp"

#include <cmath>

namespace iup::closed_form {

namespace {

double gaussian_envelope(double mismatch, double l_coh) {
    const double u = mismatch / l_coh;
    return std::exp(-0.5 * u * u);
}

// cos(2*pi*cycles); the cycle counts reach O(1e4), well inside the range
// where libm range reduction stays exact.
double cos_cycles(double cycles) { return std::cos(two_pi * cycles); }

} // namespace

TermBreakdown term_breakdown(const SetupParams& p, IdlerPhaseSign sign) {
    const DerivedQuantities d = derived(p);

    const double c1 = std::cos(p.theta1);
    const double s1 = std::sin(p.theta1);
    const double c2 = std::cos(p.theta2);
    const double s2 = std::sin(p.theta2);
    const double sqrt_t = std::sqrt(p.transmission);

    const double phi_hs = d.phi(Mode::signal_h);
    const double phi_vs = d.phi(Mode::signal_v); // includes the BBO path
    const double phi_i = d.phi(Mode::idler);
    const double idler_sign = (sign == IdlerPhaseSign::positive) ? 1.0 : -1.0;
    const double dx_cycles = p.dx / p.lambda_i;

    TermBreakdown t;
    t.pass_b_intensity = p.xi_b * p.xi_b * c2 * c2;
    t.pass_a_h_intensity = p.xi_a * p.xi_a * c1 * c1 * c2 * c2;
    t.pass_a_v_intensity = p.xi_a * p.xi_a * s1 * s1 * s2 * s2;

    t.self_interference = -2.0 * p.xi_a * p.xi_a * s1 * c1 * s2 * c2 *
                          gaussian_envelope(d.delta_l(Mode::signal_h, Mode::signal_v), d.l_coh) *
                          cos_cycles(phi_hs - phi_vs);

    t.cross_h = 2.0 * p.xi_a * p.xi_b * sqrt_t * c1 * c2 * c2 *
                gaussian_envelope(d.delta_l(Mode::signal_h, Mode::idler) - p.dx, d.l_coh) *
                cos_cycles(phi_hs + idler_sign * phi_i + dx_cycles);

    t.cross_v = -2.0 * p.xi_a * p.xi_b * sqrt_t * s1 * s2 * c2 *
                gaussian_envelope(d.delta_l(Mode::signal_v, Mode::idler) - p.dx, d.l_coh) *
                cos_cycles(phi_vs + idler_sign * phi_i + dx_cycles);

    t.total = t.sum_of_terms();
    return t;
}

double expected_counts(const SetupParams& p, IdlerPhaseSign sign) {
    return term_breakdown(p, sign).total;
}

} // namespace iup::closed_form
