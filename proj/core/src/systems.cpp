#include "cohex/systems.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cohex {

MultilevelSystem::MultilevelSystem(std::function<double(int)> dipole,
                                   std::function<double(int)> detuning,
                                   std::optional<int> top_level,
                                   int truncation_hint)
    : dipole_(std::move(dipole)),
      detuning_(std::move(detuning)),
      top_level_(top_level),
      truncation_hint_(truncation_hint) {
    if (top_level_ && *top_level_ < 1) {
        throw std::invalid_argument("MultilevelSystem: finite ladder needs top level >= 1");
    }
    if (std::abs(dipole_(1) - 1.0) > 1e-12) {
        throw std::invalid_argument("MultilevelSystem: dipole profile must have f(1) = 1");
    }
}

double MultilevelSystem::f(int n) const {
    if (n <= 0) return 0.0;
    if (top_level_ && n > *top_level_) return 0.0;
    return dipole_(n);
}

MultilevelSystem MultilevelSystem::with_truncation_hint(int levels) const {
    MultilevelSystem copy = *this;
    copy.truncation_hint_ = levels;
    return copy;
}

MultilevelSystem from_family(const PolynomialFamily& family) {
    const RecurrenceCoefficients& c = family.coeffs();
    auto dipole = [fbar = c.fbar](int n) { return fbar(n); };
    auto detuning = [s = c.s](int n) { return s(n) - s(n - 1); };
    return MultilevelSystem(std::move(dipole), std::move(detuning), family.degree_bound());
}

KravchukParameters kravchuk_from_detuning(int n_levels, double epsilon) {
    if (n_levels < 1) throw std::invalid_argument("kravchuk_from_detuning: N must be >= 1");
    KravchukParameters params;
    params.N = n_levels;
    params.epsilon = epsilon;
    params.r = std::sqrt(4.0 / n_levels + epsilon * epsilon);
    params.p = 0.5 * (1.0 + epsilon / params.r);
    params.q = 0.5 * (1.0 - epsilon / params.r);
    return params;
}

PolynomialFamily family_of(const KravchukParameters& params) {
    return PolynomialFamily::kravchuk(params.p, params.N);
}

std::vector<double> dipole_profile(int n_levels) {
    if (n_levels < 1) throw std::invalid_argument("dipole_profile: N must be >= 1");
    std::vector<double> f(static_cast<size_t>(n_levels));
    const double N = static_cast<double>(n_levels);
    for (int n = 1; n <= n_levels; ++n) {
        f[static_cast<size_t>(n) - 1] = std::sqrt(n * (N + 1.0 - n) / N);
    }
    return f;
}

} // namespace cohex
