#pragma once

#include "cohex/systems.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace cohex {

enum class Provenance { ClosedForm, Spectral, Oracle };

/// Complex amplitudes a_n(t_k) on a time grid. amps[k][n] holds level n at
/// times[k]; at t = 0 the amplitudes are the unit vector on level 0 and the
/// squared norm stays 1 to the producing method's tolerance.
struct AmplitudeTrajectory {
    std::vector<double> times;
    std::vector<std::vector<std::complex<double>>> amps;
    Provenance provenance = Provenance::ClosedForm;
    std::optional<MultilevelSystem> system;

    size_t level_count() const { return amps.empty() ? 0 : amps.front().size(); }
};

enum class DistributionKind { Poisson, Binomial, TwoLevel, Generic };

/// Level populations rho_n(t_k) = |a_n(t_k)|^2, optionally tagged with the
/// closed-form distribution shape and its parameter series (lambda(t) for
/// Poisson, y(t) for binomial / two-level).
struct PopulationDistribution {
    std::vector<double> times;
    std::vector<std::vector<double>> pops;
    DistributionKind kind = DistributionKind::Generic;
    std::vector<double> parameter; // empty for Generic
    int binomial_levels = 0;       // N for Binomial

    size_t level_count() const { return pops.empty() ? 0 : pops.front().size(); }
};

PopulationDistribution populations_of(const AmplitudeTrajectory& trajectory);

} // namespace cohex
