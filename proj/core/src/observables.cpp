#include "cohex/observables.hpp"

#include "cohex/closed_form.hpp"
#include "cohex/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cohex {

ObservableSeries summarize(const PopulationDistribution& pops) {
    ObservableSeries series;
    series.times = pops.times;
    series.norm.reserve(pops.pops.size());
    series.mean_quanta.reserve(pops.pops.size());
    for (const auto& row : pops.pops) {
        double norm = 0.0;
        double mean = 0.0;
        for (size_t n = 0; n < row.size(); ++n) {
            norm += row[n];
            mean += static_cast<double>(n) * row[n];
        }
        series.norm.push_back(norm);
        series.mean_quanta.push_back(mean);
    }
    series.mean_energy_units = series.mean_quanta; // <E> = hbar omega <n>
    return series;
}

DistributionFit fit_distribution(std::span<const double> pops,
                                 DistributionHypothesis hypothesis) {
    if (pops.empty()) throw std::invalid_argument("fit_distribution: empty populations");

    double mass = 0.0;
    double first_moment = 0.0;
    for (size_t n = 0; n < pops.size(); ++n) {
        mass += pops[n];
        first_moment += static_cast<double>(n) * pops[n];
    }
    if (mass <= 0.0) return {0.0, 0.0};
    const double mean = first_moment / mass;

    DistributionFit fit;
    const int n_max = static_cast<int>(pops.size()) - 1;
    std::vector<double> model;
    if (hypothesis == DistributionHypothesis::Poisson) {
        fit.parameter = mean;
        model = poisson_populations(mean, n_max);
    } else {
        if (n_max < 1) {
            throw std::invalid_argument("fit_distribution: binomial needs at least two levels");
        }
        const double y = std::clamp(mean / n_max, 0.0, 1.0);
        fit.parameter = y;
        model.assign(pops.size(), 0.0);
        if (y == 0.0) {
            model[0] = 1.0;
        } else if (y == 1.0) {
            model.back() = 1.0;
        } else {
            for (int n = 0; n <= n_max; ++n) {
                model[static_cast<size_t>(n)] = std::exp(log_binomial(n_max, n) +
                                                         n * std::log(y) +
                                                         (n_max - n) * std::log1p(-y));
            }
        }
    }
    for (size_t n = 0; n < pops.size(); ++n) {
        fit.sup_residual = std::max(fit.sup_residual, std::abs(pops[n] - model[n]));
    }
    return fit;
}

namespace {

// Vertex of the parabola through three samples; falls back to the middle
// abscissa when the points are not convex.
double parabolic_vertex(double t0, double v0, double t1, double v1, double t2, double v2) {
    const double x0 = t0 - t1;
    const double x2 = t2 - t1;
    const double d0 = (v0 - v1) / x0;
    const double d2 = (v2 - v1) / x2;
    const double a = (d0 - d2) / (x0 - x2);
    if (!(a > 0.0)) return t1;
    const double b = d0 - a * x0;
    const double offset = -0.5 * b / a;
    if (std::abs(offset) > std::max(std::abs(x0), std::abs(x2))) return t1;
    return t1 + offset;
}

} // namespace

std::optional<double> detect_period(const ObservableSeries& series) {
    const auto& v = series.mean_quanta;
    const auto& t = series.times;
    if (v.size() < 3) return std::nullopt;

    std::vector<double> minima;
    for (size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i] < v[i - 1] && v[i] <= v[i + 1]) {
            minima.push_back(parabolic_vertex(t[i - 1], v[i - 1], t[i], v[i], t[i + 1], v[i + 1]));
        }
    }
    if (minima.empty()) return std::nullopt;
    if (minima.size() == 1) {
        // Our scenarios start at the ground state, so t0 is itself a minimum.
        return minima.front() - t.front();
    }
    return (minima.back() - minima.front()) / static_cast<double>(minima.size() - 1);
}

} // namespace cohex
