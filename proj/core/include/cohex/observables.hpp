#pragma once

#include "cohex/trajectory.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cohex {

/// Physical summaries per grid time. mean_energy_units is the mean number
/// of absorbed quanta expressed in units of hbar*omega, i.e. numerically
/// equal to mean_quanta.
struct ObservableSeries {
    std::vector<double> times;
    std::vector<double> norm;
    std::vector<double> mean_quanta;
    std::vector<double> mean_energy_units;
    std::optional<double> period_estimate;
};

ObservableSeries summarize(const PopulationDistribution& pops);

enum class DistributionHypothesis { Poisson, Binomial };

struct DistributionFit {
    double parameter = 0.0;    // lambda (Poisson) or y (binomial, N = pops.size()-1)
    double sup_residual = 0.0; // max_n |rho_n - model_n|
};

/// One-parameter fit by matching the mean (both hypotheses are exact laws
/// in this model, so any consistent estimator works and moment matching is
/// deterministic). Degenerate input with all mass at level 0 fits with
/// parameter 0 and residual 0.
DistributionFit fit_distribution(std::span<const double> pops, DistributionHypothesis hypothesis);

/// Fundamental period of the mean-quanta series, from parabolic refinement
/// of its interior minima. nullopt when the series has no interior minimum
/// (e.g. the resonant ladder's unbounded t^2 growth). Reliable only when
/// the series spans at least two periods.
std::optional<double> detect_period(const ObservableSeries& series);

} // namespace cohex
