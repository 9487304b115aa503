#include "iup/quadrature.hpp"

#include "iup/constants.hpp"
#include "iup/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <mutex>

namespace iup::oracle {

QuadratureSpec validate(const QuadratureSpec& spec) {
    if (spec.node_count < 16) {
        throw ValidationError("quadrature_node_count: need at least 16 nodes, got " +
                              std::to_string(spec.node_count));
    }
    if (spec.scheme == QuadScheme::uniform_simpson && spec.node_count % 2 != 0) {
        throw ValidationError("quadrature_simpson_even: Simpson interval count must be even");
    }
    if (spec.scheme == QuadScheme::uniform_simpson && !(spec.span_sigmas > 0.0)) {
        throw ValidationError("quadrature_span_positive: span_sigmas must be > 0");
    }
    return spec;
}

namespace {

QuadratureRule compute_gauss_hermite(int n) {
    // Symmetric tridiagonal Jacobi matrix of the (physicists') Hermite
    // recurrence: zero diagonal, off-diagonal sqrt(k/2).
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double off = std::sqrt(0.5 * k);
        jacobi(k, k - 1) = off;
        jacobi(k - 1, k) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        const double t = solver.eigenvalues()(k); // abscissa for weight exp(-t^2)
        const double v0 = solver.eigenvectors()(0, k);
        rule.nodes[k] = std::sqrt(2.0) * t; // standard-normal abscissa
        rule.weights[k] = v0 * v0;          // already normalized: columns are unit vectors
    }
    return rule;
}

} // namespace

const QuadratureRule& gauss_hermite_rule(int node_count) {
    static std::mutex cache_mutex;
    static std::map<int, QuadratureRule> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(node_count);
    if (it == cache.end()) {
        it = cache.emplace(node_count, compute_gauss_hermite(node_count)).first;
    }
    return it->second;
}

QuadratureRule uniform_simpson_rule(int node_count, double span_sigmas) {
    const int points = node_count + 1;
    const double h = 2.0 * span_sigmas / node_count;

    QuadratureRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    double total = 0.0;
    for (int j = 0; j < points; ++j) {
        const double s = -span_sigmas + h * j;
        double coeff = (j == 0 || j == points - 1) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        const double density = std::exp(-0.5 * s * s) / std::sqrt(two_pi);
        rule.nodes[j] = s;
        rule.weights[j] = coeff * (h / 3.0) * density;
        total += rule.weights[j];
    }
    for (double& w : rule.weights) {
        w /= total;
    }
    return rule;
}

QuadratureRule make_rule(const QuadratureSpec& spec) {
    validate(spec);
    if (spec.scheme == QuadScheme::gauss_hermite) {
        return gauss_hermite_rule(spec.node_count);
    }
    return uniform_simpson_rule(spec.node_count, spec.span_sigmas);
}

} // namespace iup::oracle
