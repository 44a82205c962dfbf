#include "cohex/spectral.hpp"

#include "cohex/errors.hpp"
#include "cohex/quadrature.hpp"
#include "compensated.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cohex {

namespace {

constexpr double kDoublingTol = 1e-11;
constexpr int kMaxQuadOrder = 4096;

struct Spectrum {
    std::vector<double> abscissas;
    std::vector<double> masses; // sigma(x) * p_0 (discrete) or w_i * p_0 (quadrature)
    std::vector<std::vector<double>> poly; // poly[i][n] = p_n(abscissas[i])
};

Spectrum tabulate_discrete(const SpectralSolution& solution, int n_max) {
    const PolynomialFamily& family = solution.family;
    Spectrum spec;
    if (solution.truncation > 0 && !family.finite()) {
        for (int x = 0; x <= solution.truncation; ++x) {
            spec.abscissas.push_back(static_cast<double>(x));
        }
    } else {
        for (int x : family.support_points()) spec.abscissas.push_back(static_cast<double>(x));
    }
    for (double x : spec.abscissas) {
        spec.masses.push_back(family.weight(x) * family.p0());
        spec.poly.push_back(family.eval_sequence(x, n_max));
    }
    return spec;
}

Spectrum tabulate_quadrature(const PolynomialFamily& family, int order, int n_max) {
    GaussHermiteRule rule = gauss_hermite_rule(order);
    Spectrum spec;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        // Underflowed weights contribute nothing; skipping them also keeps
        // the (then overflowing) polynomial values out of the sum.
        if (rule.weights[i] == 0.0) continue;
        spec.abscissas.push_back(rule.nodes[i]);
        spec.masses.push_back(rule.weights[i] * family.p0());
        spec.poly.push_back(family.eval_sequence(rule.nodes[i], n_max));
    }
    return spec;
}

// The common Fourier kernel: a_n(t) = e^{i s_n t} sum_i mass_i p_n(x_i) e^{i r x_i t},
// with compensated summation against cancellation between the oscillatory terms.
std::vector<std::complex<double>> contract(const Spectrum& spec,
                                           const RecurrenceCoefficients& coeffs, double t,
                                           int n_max) {
    std::vector<detail::CompensatedComplexSum> sums(static_cast<size_t>(n_max) + 1);
    for (size_t i = 0; i < spec.abscissas.size(); ++i) {
        const double phase = coeffs.r * spec.abscissas[i] * t;
        const std::complex<double> kernel =
            spec.masses[i] * std::complex<double>{std::cos(phase), std::sin(phase)};
        for (int n = 0; n <= n_max; ++n) {
            sums[static_cast<size_t>(n)].add(kernel * spec.poly[i][static_cast<size_t>(n)]);
        }
    }
    std::vector<std::complex<double>> amps(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double sn_t = coeffs.s(n) * t;
        amps[static_cast<size_t>(n)] =
            std::complex<double>{std::cos(sn_t), std::sin(sn_t)} *
            sums[static_cast<size_t>(n)].value();
    }
    return amps;
}

double max_abs_difference(std::span<const std::complex<double>> a,
                          std::span<const std::complex<double>> b) {
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

int automatic_order(double t, int n_max) {
    // Effective bandwidth of the e^{i r x t} factor grows linearly with t.
    return std::max(8, static_cast<int>(std::ceil(n_max + 2.0 * t * t + 20.0)));
}

// Escalating Gauss-Hermite evaluation with the doubling convergence check;
// `t_order` is the time whose bandwidth sizes the rule.
std::vector<std::vector<std::complex<double>>> quadrature_amplitudes(
    const SpectralSolution& solution, std::span<const double> times, double t_order,
    int n_max) {
    int order = solution.quad_order > 0 ? solution.quad_order : automatic_order(t_order, n_max);
    if (2 * order > kMaxQuadOrder) {
        throw AccuracyError("spectral: the e^{irxt} bandwidth at t = " + std::to_string(t_order) +
                            " needs Gauss-Hermite order " + std::to_string(order) +
                            " (doubling check included: " + std::to_string(2 * order) +
                            "), above the cap of " + std::to_string(kMaxQuadOrder) +
                            "; use the closed form or the oracle at long times");
    }
    Spectrum coarse = tabulate_quadrature(solution.family, order, n_max);
    while (true) {
        const int doubled = 2 * order;
        Spectrum fine = tabulate_quadrature(solution.family, doubled, n_max);

        double worst = 0.0;
        std::vector<std::vector<std::complex<double>>> results;
        results.reserve(times.size());
        for (double t : times) {
            auto a_coarse = contract(coarse, solution.family.coeffs(), t, n_max);
            auto a_fine = contract(fine, solution.family.coeffs(), t, n_max);
            worst = std::max(worst, max_abs_difference(a_coarse, a_fine));
            results.push_back(std::move(a_fine));
        }
        if (worst <= kDoublingTol) return results;
        if (2 * doubled > kMaxQuadOrder) {
            throw AccuracyError("spectral: Gauss-Hermite order " + std::to_string(order) +
                                " -> " + std::to_string(doubled) + " still moves amplitudes by " +
                                std::to_string(worst) + " (> " + std::to_string(kDoublingTol) +
                                "); integrand bandwidth too high for the order cap");
        }
        order = doubled;
        coarse = std::move(fine);
    }
}

int default_check_depth(const PolynomialFamily& family) {
    return family.finite() ? *family.degree_bound() + 1 : 64;
}

} // namespace

SpectralSolution SpectralSolution::for_family(const PolynomialFamily& family) {
    const Mode mode = family.kind() == FamilyKind::Hermite ? Mode::ContinuousQuadrature
                                                           : Mode::DiscreteSum;
    return SpectralSolution(family, mode);
}

std::vector<std::complex<double>> amplitudes_at(const SpectralSolution& solution, double t,
                                                int n_max) {
    if (n_max < 0) throw std::domain_error("amplitudes_at: n_max must be >= 0");
    if (solution.family.degree_bound() && n_max > *solution.family.degree_bound()) {
        throw std::domain_error("amplitudes_at: n_max exceeds the family's top degree");
    }
    if (solution.mode == SpectralSolution::Mode::DiscreteSum) {
        const Spectrum spec = tabulate_discrete(solution, n_max);
        return contract(spec, solution.family.coeffs(), t, n_max);
    }
    const double grid[1] = {t};
    return quadrature_amplitudes(solution, grid, t, n_max).front();
}

AmplitudeTrajectory spectral_trajectory(const SpectralSolution& solution,
                                        std::span<const double> times, int n_max) {
    AmplitudeTrajectory trajectory;
    trajectory.times.assign(times.begin(), times.end());
    trajectory.provenance = Provenance::Spectral;
    trajectory.system = from_family(solution.family);

    if (solution.mode == SpectralSolution::Mode::DiscreteSum) {
        const Spectrum spec = tabulate_discrete(solution, n_max);
        trajectory.amps.reserve(times.size());
        for (double t : times) {
            trajectory.amps.push_back(contract(spec, solution.family.coeffs(), t, n_max));
        }
        return trajectory;
    }

    const double t_order = times.empty() ? 0.0 : *std::max_element(times.begin(), times.end());
    trajectory.amps = quadrature_amplitudes(solution, times, t_order, n_max);
    return trajectory;
}

RecurrenceMatch verify_recurrence_match(const PolynomialFamily& family,
                                        const MultilevelSystem& system, int n_check) {
    if (n_check <= 0) n_check = default_check_depth(family);
    const RecurrenceCoefficients& c = family.coeffs();

    double deviation = 0.0;
    for (int n = 0; n <= n_check; ++n) {
        deviation = std::max(deviation, std::abs(system.f(n) - c.fbar(n)));
        if (n >= 1) {
            deviation = std::max(deviation, std::abs(system.eps(n) - (c.s(n) - c.s(n - 1))));
        }
    }
    return {deviation <= 1e-12, deviation};
}

} // namespace cohex
