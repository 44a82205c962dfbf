#pragma once

#include "cohex/systems.hpp"
#include "cohex/trajectory.hpp"

#include <span>

namespace cohex {

struct IntegratorSettings {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.0;          // 0 = uncapped
    int truncation_levels = 0;      // infinite systems; 0 = automatic policy
    double tail_guard = 1e-12;      // max population allowed in the top two retained levels
    int max_truncation_retries = 5;
};

/// Brute-force ground truth: integrates
///
///   da_n/dt = i [ f(n+1) e^{-i eps(n+1) t} a_{n+1} + f(n) e^{+i eps(n) t} a_{n-1} ],
///   a_n(0) = delta_{n,0},
///
/// with an adaptive Dormand-Prince 5(4) pair and cubic Hermite dense output
/// at the requested times. Uses only f(n) and eps(n); no polynomial code
/// path, so it is an independent check of every closed form.
///
/// Infinite ladders are truncated (settings, then the system's hint, then
/// levels ~ t_max^2 + 12 t_max + 30); if the top two retained levels ever
/// hold more than tail_guard, the truncation is raised by 1.5x and the run
/// repeated, up to max_truncation_retries (then TruncationError).
AmplitudeTrajectory integrate(const MultilevelSystem& system,
                              std::span<const double> times,
                              const IntegratorSettings& settings = {});

/// max_k |sum_n |a_n(t_k)|^2 - 1|; integrator health metric (the exact flow
/// is norm-preserving).
double norm_drift(const AmplitudeTrajectory& trajectory);

/// Integrates to t_end, then back to 0 with the negated right-hand side,
/// and returns max_n |a_n - delta_{n,0}| of the returned state.
double reversibility_defect(const MultilevelSystem& system, double t_end,
                            const IntegratorSettings& settings = {});

} // namespace cohex
