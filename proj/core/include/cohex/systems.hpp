#pragma once

#include "cohex/polynomials.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace cohex {

/// The physical model behind the amplitude equations: dipole-moment profile
/// f(n) of the n-1 <-> n transition (normalized to f(1) = 1) and the
/// dimensionless detuning eps(n) of each transition. Immutable value type.
class MultilevelSystem {
public:
    /// `top_level` is N for a finite ladder with levels 0..N, nullopt for an
    /// infinite one. Infinite systems carry a truncation hint (0 = let the
    /// integrator pick); the hint is advisory, not part of the physics.
    MultilevelSystem(std::function<double(int)> dipole,
                     std::function<double(int)> detuning,
                     std::optional<int> top_level,
                     int truncation_hint = 0);

    /// Dipole moment of transition n-1 <-> n; f(0) = 0 and, for finite
    /// ladders, f(n) = 0 beyond the top transition.
    double f(int n) const;

    /// Detuning of transition n (n >= 1).
    double eps(int n) const { return detuning_(n); }

    std::optional<int> top_level() const noexcept { return top_level_; }
    bool finite() const noexcept { return top_level_.has_value(); }
    int truncation_hint() const noexcept { return truncation_hint_; }

    MultilevelSystem with_truncation_hint(int levels) const;

private:
    std::function<double(int)> dipole_;
    std::function<double(int)> detuning_;
    std::optional<int> top_level_;
    int truncation_hint_ = 0;
};

/// Matching conditions: the system whose equations the family's Fourier sum
/// solves, with f(n) = fbar(n) and eps(n) = s(n) - s(n-1).
MultilevelSystem from_family(const PolynomialFamily& family);

/// Parameters of one member of the finite equidistant-ladder family, tied
/// together by r = sqrt(4/N + eps^2) and eps = (p-q)/sqrt(p q N).
struct KravchukParameters {
    int N = 1;
    double epsilon = 0.0;
    double p = 0.5;
    double q = 0.5;
    double r = 2.0;
};

/// Inverts the (N, eps) pair to the weight parameter: p = (1 + eps/r)/2.
/// Any real eps is admissible; p stays strictly inside (0,1).
KravchukParameters kravchuk_from_detuning(int n_levels, double epsilon);

PolynomialFamily family_of(const KravchukParameters& params);

/// f(1)..f(N) with f(n) = sqrt(n(N+1-n)/N); symmetric about the middle.
std::vector<double> dipole_profile(int n_levels);

/// Conversions from the physical description: a laser of Rabi frequency
/// `rabi` (mu01*E/2hbar, rad/s) acting for `tau` seconds gives dimensionless
/// time t = rabi*tau, and a transition of frequency omega_n driven at
/// omega_laser has dimensionless detuning (omega_n - omega_laser)/rabi.
inline double dimensionless_time(double tau, double rabi) { return rabi * tau; }
inline double dimensionless_detuning(double omega_n, double omega_laser, double rabi) {
    return (omega_n - omega_laser) / rabi;
}

} // namespace cohex
