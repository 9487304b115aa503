#include "iup/oracle.hpp"

#include "iup/errors.hpp"

#include <cmath>

namespace iup::oracle {

namespace {

double pump_omega(const SetupParams& p) { return two_pi * speed_of_light / p.lambda_p; }
double signal_center_omega(const SetupParams& p) { return two_pi * speed_of_light / p.lambda_s; }

void check_frequency(const SetupParams& p, double omega_s) {
    if (!(omega_s > 0.0)) {
        throw ValidationError("oracle_omega_s_positive: signal frequency must be > 0");
    }
    if (!(omega_s < pump_omega(p))) {
        throw ValidationError(
            "oracle_omega_s_below_pump: omega_s >= omega_p leaves no idler energy");
    }
}

PairState propagate_with_gains(const SetupParams& p, double omega_s, double xi_a, double xi_b) {
    const double omega_i = pump_omega(p) - omega_s;
    PairState state;
    for (const ElementStep& step : canonical_elements(p, xi_a, xi_b)) {
        apply_element(state, step, omega_s, omega_i);
    }
    return state;
}

double detector_expectation(const PairState& s) {
    return std::norm(s.hs_hi) + std::norm(s.hs_b);
}

// Expectation per unit spectral density: every term of the expectation is
// bilinear in the gains, so the common Gaussian envelope factors out.
double reduced_expectation(const SetupParams& p, double omega_s) {
    return detector_expectation(propagate_with_gains(p, omega_s, p.xi_a, p.xi_b));
}

double quadrature_pass(const SetupParams& p, const QuadratureRule& rule) {
    const double omega_s0 = signal_center_omega(p);
    const double omega_p = pump_omega(p);
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double omega_s = omega_s0 + p.delta_omega_s * rule.nodes[k];
        if (!(omega_s > 0.0) || !(omega_s < omega_p)) {
            throw ValidationError(
                "oracle_quadrature_node_range: spectral node leaves the physical band; "
                "bandwidth too large for this configuration");
        }
        sum += rule.weights[k] * reduced_expectation(p, omega_s);
    }
    return sum;
}

QuadratureSpec doubled(const QuadratureSpec& quad) {
    QuadratureSpec refined = quad;
    refined.node_count = 2 * quad.node_count;
    return refined;
}

} // namespace

double gain_density(const SetupParams& p, double omega_s) {
    const double u = (omega_s - signal_center_omega(p)) / p.delta_omega_s;
    return std::exp(-0.5 * u * u) / (std::sqrt(two_pi) * p.delta_omega_s);
}

PairState propagate_state(const SetupParams& p, double omega_s) {
    check_frequency(p, omega_s);
    const double envelope = std::sqrt(gain_density(p, omega_s));
    return propagate_with_gains(p, omega_s, p.xi_a * envelope, p.xi_b * envelope);
}

double detector_expectation_monochromatic(const SetupParams& p, double omega_s) {
    return detector_expectation(propagate_state(p, omega_s));
}

double integrate_over_frequency(const SetupParams& p, const QuadratureSpec& quad) {
    validate(quad);
    const double coarse = quadrature_pass(p, make_rule(quad));
    const double fine = quadrature_pass(p, make_rule(doubled(quad)));
    const double scale = std::max(std::abs(fine), 1e-30);
    if (std::abs(coarse - fine) > 1e-9 * scale) {
        throw ConvergenceError(
            "oracle_quadrature_convergence: doubling the node count moved the result by more "
            "than 1e-9 relative; increase node_count");
    }
    return coarse;
}

} // namespace iup::oracle
