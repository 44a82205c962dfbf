#include "cohex/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cohex {

namespace {

// Christoffel number at one node: w = 1 / sum_{k<order} p_k(x)^2 over the
// orthonormal sequence. Unlike the squared first eigenvector component this
// keeps full relative accuracy at the extreme nodes, where the weights are
// many orders below 1. The partial sums can overflow long before the final
// weight does, so the recurrence runs with periodic rescaling.
double christoffel_weight(double x, int order) {
    const double p0 = std::pow(std::numbers::pi, -0.25);
    double prev = 0.0;
    double value = p0;
    double sum = 0.0;
    double log_offset = 0.0; // stored values = true values * exp(-log_offset)

    for (int k = 0; k < order; ++k) {
        sum += value * value;
        const double next = (std::numbers::sqrt2 * x * value - std::sqrt(static_cast<double>(k)) * prev) /
                            std::sqrt(static_cast<double>(k) + 1.0);
        prev = value;
        value = next;
        if (std::abs(value) > 1e150) {
            constexpr double factor = 1e-150;
            value *= factor;
            prev *= factor;
            sum *= factor * factor;
            log_offset += 150.0 * std::numbers::ln10;
        }
    }
    // true sum = sum * exp(2*log_offset); underflow to 0 is the right answer
    // for the outermost nodes of very high-order rules.
    return std::exp(-std::log(sum) - 2.0 * log_offset);
}

} // namespace

GaussHermiteRule gauss_hermite_rule(int order) {
    if (order < 1) {
        throw std::invalid_argument("gauss_hermite_rule: order must be >= 1");
    }

    // Jacobi matrix of the orthonormal sequence: zero diagonal (s_n = 0),
    // off-diagonal fbar(n)/r = sqrt(n/2).
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
    Eigen::VectorXd sub(order > 1 ? order - 1 : 0);
    for (int n = 1; n < order; ++n) {
        sub[n - 1] = std::sqrt(0.5 * n);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("gauss_hermite_rule: tridiagonal eigensolve failed");
    }

    GaussHermiteRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        rule.nodes[i] = solver.eigenvalues()[i];
        rule.weights[i] = christoffel_weight(rule.nodes[i], order);
    }
    return rule;
}

} // namespace cohex
