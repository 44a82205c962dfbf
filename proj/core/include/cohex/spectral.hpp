#pragma once

#include "cohex/polynomials.hpp"
#include "cohex/systems.hpp"
#include "cohex/trajectory.hpp"

#include <complex>
#include <utility>
#include <span>
#include <vector>

namespace cohex {

/// General solution mechanism: amplitudes reconstructed as weighted Fourier
/// sums (discrete spectra) or integrals (continuous spectrum) over a
/// polynomial sequence,
///
///   a_n(t) = e^{i s_n t} * sum_x sigma(x) p_0 p_n(x) e^{i r x t},
///
/// independent of the per-family simplified closed forms.
struct SpectralSolution {
    enum class Mode { DiscreteSum, ContinuousQuadrature };

    PolynomialFamily family;
    Mode mode;
    int quad_order = 0; // continuous mode; 0 = automatic (scales with t)
    int truncation = 0; // Charlier sum; 0 = automatic from the weight tail

    SpectralSolution(PolynomialFamily family_, Mode mode_)
        : family(std::move(family_)), mode(mode_) {}

    /// Discrete sum for the discrete-grid families, quadrature for Hermite.
    static SpectralSolution for_family(const PolynomialFamily& family);
};

/// Amplitudes a_0..a_{n_max} at one time. Continuous mode escalates the
/// quadrature order until doubling it moves no amplitude by more than
/// ~1e-11; if that never happens an AccuracyError carries the diagnostic.
std::vector<std::complex<double>> amplitudes_at(const SpectralSolution& solution, double t,
                                                int n_max);

/// Same reconstruction over a whole grid, reusing the spectrum values (and,
/// in continuous mode, one quadrature rule sized for the largest time).
AmplitudeTrajectory spectral_trajectory(const SpectralSolution& solution,
                                        std::span<const double> times, int n_max);

struct RecurrenceMatch {
    bool matched = false;
    double max_deviation = 0.0;
};

/// Checks the conditions under which the Fourier sum solves the amplitude
/// equations: f(n) = fbar(n) and eps(n) = s(n) - s(n-1), over transitions
/// 1..n_check (default: N+1 for finite families, 64 otherwise).
RecurrenceMatch verify_recurrence_match(const PolynomialFamily& family,
                                        const MultilevelSystem& system, int n_check = 0);

} // namespace cohex
