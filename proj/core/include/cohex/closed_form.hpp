#pragma once

#include "cohex/polynomials.hpp"
#include "cohex/systems.hpp"

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace cohex {

/// Exact amplitudes of the resonantly driven infinite ladder with
/// f(n) = sqrt(n): a_n(t) = i^n t^n / sqrt(n!) * exp(-t^2/2). Populations
/// are Poisson with mean t^2.
std::vector<std::complex<double>> harmonic_resonant_amplitudes(double t, int n_max);

/// Exact amplitudes of the same ladder driven off resonance (eps != 0):
///
///   a_n = exp(i (n eps + 1/eps) t) (theta/eps)^n / sqrt(n!) exp(-theta/eps^2),
///   theta = 1 - exp(-i eps t),
///
/// evaluated at the signed eps; for eps < 0 this equals (-1)^n times the
/// conjugate of the |eps| solution and leaves the populations unchanged.
/// Throws std::domain_error at eps = 0 (use harmonic_resonant_amplitudes).
std::vector<std::complex<double>> harmonic_detuned_amplitudes(double t, double epsilon,
                                                              int n_max);

/// Poisson parameter of the detuned ladder: (2/eps)^2 sin^2(eps t / 2),
/// continued to t^2 at eps = 0.
double poisson_parameter(double epsilon, double t);

/// Poisson probabilities lambda^n e^-lambda / n! for n = 0..n_max,
/// evaluated in log space.
std::vector<double> poisson_populations(double lambda, int n_max);

/// Number of levels that keeps the truncated Poisson mass deficit below
/// ~1e-10: ceil(lambda + 12 sqrt(lambda) + 30).
int poisson_truncation_levels(double lambda_max);

/// Exact amplitudes of the finite equidistant ladder:
///
///   a_n(t) = [C(N,n) (pq)^n]^{1/2} (p e^{irt} + q)^{N-n} (e^{irt} - 1)^n
///            * exp(i [(p-q) n - p N] r t),
///
/// with the binomial symbol and powers evaluated through logs so that N up
/// to several hundred stays in range.
std::vector<std::complex<double>> kravchuk_amplitudes(const KravchukParameters& params,
                                                      double t);

struct BinomialPopulations {
    std::vector<double> rho; // rho_0..rho_N
    double y = 0.0;          // binomial parameter, guaranteed in [0, 1]
};

/// Binomial populations rho_n = C(N,n) (1-y)^{N-n} y^n with
/// y(t) = (1/N)(2/r)^2 sin^2(rt/2).
BinomialPopulations kravchuk_populations(const KravchukParameters& params, double t);

struct TwoLevelPopulations {
    double rho0 = 1.0;
    double rho1 = 0.0;
    double y = 0.0;
};

/// The N = 1 special case in its textbook form: Omega = sqrt(1 + (eps/2)^2),
/// y = sin^2(Omega t)/Omega^2. Identical to kravchuk_populations at N = 1
/// (r = 2 Omega).
TwoLevelPopulations two_level(double epsilon, double t);

/// Sup-norm distances between the finite-ladder populations at each N and
/// the Poisson law with lambda(t) = poisson_parameter(epsilon, t); decays
/// like O(1/N).
std::vector<double> poisson_limit_distances(std::span<const int> ladder_sizes,
                                            double epsilon, double t);

/// Fourier spectrum S_n(x) = sigma(x) p_0 p_n(x) of the n-th amplitude.
std::function<double(double)> spectrum(const PolynomialFamily& family, int n);

} // namespace cohex
