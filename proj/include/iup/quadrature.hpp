#pragma once

// Quadrature rules for averaging against a standard normal density:
// sum_k w_k f(s_k) approximates E[f(S)] with S ~ N(0,1). Weights are
// normalized so that they sum to 1.

#include <vector>

namespace iup::oracle {

enum class QuadScheme { gauss_hermite, uniform_simpson };

struct QuadratureSpec {
    int node_count = 128;
    QuadScheme scheme = QuadScheme::gauss_hermite;
    double span_sigmas = 6.0; // half-width of the uniform-Simpson grid
};

// Throws ValidationError on node_count < 16, odd Simpson node counts, or a
// non-positive span.
QuadratureSpec validate(const QuadratureSpec& spec);

struct QuadratureRule {
    std::vector<double> nodes;   // standard-normal abscissas
    std::vector<double> weights; // sum to 1
};

// Gauss-Hermite rule mapped to the standard normal weight (Golub-Welsch on
// the Hermite Jacobi matrix). Cached per node count.
const QuadratureRule& gauss_hermite_rule(int node_count);

// Composite Simpson over [-span_sigmas, span_sigmas] with node_count
// intervals (node_count + 1 points), weighted by the normal density and
// normalized to unit total weight.
QuadratureRule uniform_simpson_rule(int node_count, double span_sigmas);

QuadratureRule make_rule(const QuadratureSpec& spec);

} // namespace iup::oracle
