#include "iup/pair_state.hpp"

#include <cmath>

namespace iup::oracle {

namespace {

using namespace std::complex_literals;

Amplitude phase_factor(double radians) {
    return std::exp(Amplitude(0.0, -radians));
}

// Waveplate action on a signal-mode pair (h, v) with mixing angle theta:
// h -> cos(theta) h + i sin(theta) v, v -> i sin(theta) h + cos(theta) v.
void mix_signal(Amplitude& h, Amplitude& v, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Amplitude h_new = c * h + 1.0i * s * v;
    const Amplitude v_new = 1.0i * s * h + c * v;
    h = h_new;
    v = v_new;
}

struct Applier {
    PairState& st;
    double omega_s;
    double omega_i;

    void operator()(const SpdcA& e) const { st.hs_hi += e.xi; }

    void operator()(const IdlerDelay& e) const {
        const Amplitude f = phase_factor(omega_i * e.dx / speed_of_light);
        st.hs_hi *= f;
        st.vs_hi *= f;
    }

    void operator()(const LossBeamsplitter& e) const {
        const double c = std::cos(e.beta);
        const double s = std::sin(e.beta);
        const Amplitude hs_hi_new = c * st.hs_hi - s * st.hs_b;
        const Amplitude hs_b_new = s * st.hs_hi + c * st.hs_b;
        const Amplitude vs_hi_new = c * st.vs_hi - s * st.vs_b;
        const Amplitude vs_b_new = s * st.vs_hi + c * st.vs_b;
        st.hs_hi = hs_hi_new;
        st.hs_b = hs_b_new;
        st.vs_hi = vs_hi_new;
        st.vs_b = vs_b_new;
    }

    void operator()(const DoubledQwp& e) const {
        mix_signal(st.hs_hi, st.vs_hi, e.theta1);
        mix_signal(st.hs_b, st.vs_b, e.theta1);
    }

    void operator()(const SpdcB& e) const {
        // Pass-A amplitudes pick up the crystal propagation phase of the
        // second pass; components whose idler was lost only carry the signal
        // part. Pass-B generation then adds coherently.
        const double l = e.crystal_length;
        const double idler_phase = omega_i * l * e.n_i / speed_of_light;
        st.hs_hi *= phase_factor(omega_s * l * e.n_hs / speed_of_light + idler_phase);
        st.vs_hi *= phase_factor(omega_s * l * e.n_vs / speed_of_light + idler_phase);
        st.hs_b *= phase_factor(omega_s * l * e.n_hs / speed_of_light);
        st.vs_b *= phase_factor(omega_s * l * e.n_vs / speed_of_light);
        st.hs_hi += e.xi;
    }

    void operator()(const BboPath& e) const {
        const Amplitude f = phase_factor(omega_s * e.delta_v / speed_of_light);
        st.vs_hi *= f;
        st.vs_b *= f;
    }

    void operator()(const OutputHwp& e) const {
        mix_signal(st.hs_hi, st.vs_hi, e.theta2);
        mix_signal(st.hs_b, st.vs_b, e.theta2);
    }
};

} // namespace

double PairState::pair_probability() const {
    return std::norm(hs_hi) + std::norm(vs_hi) + std::norm(hs_b) + std::norm(vs_b);
}

std::vector<ElementStep> canonical_elements(const SetupParams& p, double xi_a, double xi_b) {
    const double beta = std::acos(std::sqrt(p.transmission));
    return {
        SpdcA{xi_a},
        IdlerDelay{p.dx},
        LossBeamsplitter{beta},
        DoubledQwp{p.theta1},
        SpdcB{xi_b, p.crystal_length, p.n_hs, p.n_vs, p.n_i},
        BboPath{p.bbo_extra_path},
        OutputHwp{p.theta2},
    };
}

void apply_element(PairState& state, const ElementStep& step, double omega_s, double omega_i) {
    std::visit(Applier{state, omega_s, omega_i}, step);
}

} // namespace iup::oracle
