#pragma once

#include <vector>

namespace cohex {

/// Nodes and weights of a Gauss rule for the weight exp(-x^2) on the real
/// line: sum_i w_i f(x_i) ~ integral of exp(-x^2) f(x) dx, exact for
/// polynomials f of degree <= 2*order - 1.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Golub-Welsch construction from the orthonormal Hermite recurrence: the
/// nodes are the eigenvalues of the symmetric tridiagonal Jacobi matrix with
/// off-diagonal fbar(n)/r = sqrt(n/2), and the weights come from the first
/// eigenvector components scaled by the weight mass sqrt(pi).
GaussHermiteRule gauss_hermite_rule(int order);

} // namespace cohex
