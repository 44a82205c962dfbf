// Test-only reference evaluations, independent of the recurrence-based
// implementation path they are used to check.
#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace cohex::testref {

// Orthonormal finite-ladder polynomials through the terminating
// hypergeometric sum:
//
//   p_n(x) = (-1)^n sqrt(C(N,n)) (p/q)^{n/2} 2F1(-n, -x; -N; 1/p),
//
// summed term by term. Practical for N up to a few tens.
inline double hypergeometric_kravchuk(double p, int n_levels, int degree, int x) {
    const double q = 1.0 - p;
    double f21 = 1.0;
    double term = 1.0;
    const int j_max = std::min(degree, x);
    for (int j = 0; j < j_max; ++j) {
        term *= static_cast<double>(-degree + j) * static_cast<double>(-x + j) /
                (static_cast<double>(-n_levels + j) * (j + 1.0)) / p;
        f21 += term;
    }
    double log_norm = 0.5 * degree * std::log(p / q);
    for (int k = 1; k <= degree; ++k) { // 0.5*log C(N, degree)
        log_norm += 0.5 * std::log(static_cast<double>(n_levels - k + 1) / k);
    }
    const double sign = (degree % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(log_norm) * f21;
}

inline std::vector<double> hypergeometric_kravchuk_sequence(double p, int n_levels, double x,
                                                            int n_max) {
    std::vector<double> values(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        values[static_cast<size_t>(n)] =
            hypergeometric_kravchuk(p, n_levels, n, static_cast<int>(std::lround(x)));
    }
    return values;
}

// Orthonormal Hermite values from the textbook H_{n+1} = 2x H_n - 2n H_{n-1}
// recurrence, rescaled by sqrt(2^n n! sqrt(pi)).
inline std::vector<double> textbook_hermite_sequence(double x, int n_max) {
    std::vector<double> h(static_cast<size_t>(n_max) + 1);
    h[0] = 1.0;
    if (n_max >= 1) h[1] = 2.0 * x;
    for (int n = 1; n < n_max; ++n) {
        h[static_cast<size_t>(n) + 1] =
            2.0 * x * h[static_cast<size_t>(n)] - 2.0 * n * h[static_cast<size_t>(n) - 1];
    }
    std::vector<double> values(h.size());
    const double log_sqrt_pi = 0.25 * std::log(std::numbers::pi);
    double log_scale = 0.0; // 0.5*log(2^n n!)
    for (int n = 0; n <= n_max; ++n) {
        values[static_cast<size_t>(n)] =
            h[static_cast<size_t>(n)] * std::exp(-log_scale - log_sqrt_pi);
        log_scale += 0.5 * std::log(2.0 * (n + 1.0));
    }
    return values;
}

} // namespace cohex::testref
