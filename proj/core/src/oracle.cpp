#include "cohex/oracle.hpp"

#include "cohex/closed_form.hpp"
#include "cohex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohex {

namespace {

using State = std::vector<std::complex<double>>;

// Eq.-literal right-hand side on a ladder of `levels` retained levels, with
// the dipole and detuning values cached once per run. The time-dependent
// phases are evaluated per call. `sign` = -1 integrates the reversed flow
// d/ds a(t_ref - s) used by the reversibility check.
struct LadderRhs {
    std::vector<double> f;   // f[n], n = 0..levels (f[levels] couples out of the top; 0 if finite)
    std::vector<double> eps; // eps[n], n = 0..levels (index 0 unused)
    double sign = 1.0;
    double t_ref = 0.0; // physical time = t_ref + sign * integration variable

    void operator()(double s, const State& y, State& dy) const {
        const int levels = static_cast<int>(y.size());
        const double t = t_ref + sign * s;
        const std::complex<double> i_sign{0.0, sign};
        for (int n = 0; n < levels; ++n) {
            std::complex<double> acc{0.0, 0.0};
            if (n + 1 < levels && f[static_cast<size_t>(n) + 1] != 0.0) {
                const double phase = -eps[static_cast<size_t>(n) + 1] * t;
                acc += f[static_cast<size_t>(n) + 1] *
                       std::complex<double>{std::cos(phase), std::sin(phase)} *
                       y[static_cast<size_t>(n) + 1];
            }
            if (n >= 1 && f[static_cast<size_t>(n)] != 0.0) {
                const double phase = eps[static_cast<size_t>(n)] * t;
                acc += f[static_cast<size_t>(n)] *
                       std::complex<double>{std::cos(phase), std::sin(phase)} *
                       y[static_cast<size_t>(n) - 1];
            }
            dy[static_cast<size_t>(n)] = i_sign * acc;
        }
    }
};

// Dormand-Prince 5(4) coefficients.
constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
// b - bhat, where bhat is the embedded 4th-order weight row.
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

void axpy(State& out, const State& base, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    const size_t n = base.size();
    for (size_t i = 0; i < n; ++i) {
        std::complex<double> acc = base[i];
        for (const auto& [coef, k] : terms) {
            acc += h * coef * (*k)[i];
        }
        out[i] = acc;
    }
}

// RMS of the error estimate against the mixed tolerance, complex components
// treated as paired reals.
double error_norm(const State& err, const State& y0, const State& y1, double atol, double rtol) {
    double acc = 0.0;
    const size_t n = y0.size();
    for (size_t i = 0; i < n; ++i) {
        const double sc_re = atol + rtol * std::max(std::abs(y0[i].real()), std::abs(y1[i].real()));
        const double sc_im = atol + rtol * std::max(std::abs(y0[i].imag()), std::abs(y1[i].imag()));
        const double er = err[i].real() / sc_re;
        const double ei = err[i].imag() / sc_im;
        acc += er * er + ei * ei;
    }
    return std::sqrt(acc / (2.0 * static_cast<double>(n)));
}

State hermite_interpolate(double theta, double h, const State& y0, const State& y1,
                          const State& f0, const State& f1) {
    State out(y0.size());
    const double u = theta;
    const double h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
    const double h10 = u * (1.0 - u) * (1.0 - u);
    const double h01 = u * u * (3.0 - 2.0 * u);
    const double h11 = u * u * (u - 1.0);
    for (size_t i = 0; i < y0.size(); ++i) {
        out[i] = h00 * y0[i] + h01 * y1[i] + h * (h10 * f0[i] + h11 * f1[i]);
    }
    return out;
}

struct CoreResult {
    std::vector<State> outputs; // one state per requested output time
    double max_tail = 0.0;      // max population seen in the top two levels
};

// Adaptive integration of rhs over [0, span] with dense output at `outputs`
// (sorted, first may be 0). Throws StiffnessError on step underflow.
CoreResult integrate_core(const LadderRhs& rhs, State y, double span,
                          std::span<const double> outputs, const IntegratorSettings& cfg) {
    const size_t dim = y.size();
    CoreResult result;
    result.outputs.reserve(outputs.size());

    auto note_tail = [&](const State& state) {
        if (dim >= 2) {
            result.max_tail = std::max({result.max_tail, std::norm(state[dim - 1]),
                                        std::norm(state[dim - 2])});
        }
    };

    size_t next_out = 0;
    while (next_out < outputs.size() && outputs[next_out] <= 0.0) {
        result.outputs.push_back(y);
        ++next_out;
    }
    note_tail(y);
    if (span <= 0.0) {
        for (; next_out < outputs.size(); ++next_out) result.outputs.push_back(y);
        return result;
    }

    State k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);
    State y_stage(dim), y_next(dim), err(dim);

    rhs(0.0, y, k1);

    // Starting step from the scaled derivative magnitude, then controlled.
    double h = 1e-3 * span;
    {
        double d1 = 0.0;
        for (size_t i = 0; i < dim; ++i) d1 = std::max(d1, std::abs(k1[i]));
        if (d1 > 0.0) h = std::min(h, 0.01 / d1);
    }
    if (cfg.max_step > 0.0) h = std::min(h, cfg.max_step);

    double t = 0.0;
    bool last_rejected = false;
    while (t < span) {
        if (span - t < 1e-13 * std::max(span, 1.0)) break; // rounding leftover
        if (h >= span - t || span - t < 1.1 * h) h = span - t; // stretch the final step
        if (h < 1e-14 * std::max(1.0, std::abs(t))) {
            throw StiffnessError("oracle: step size underflow at t = " + std::to_string(t));
        }

        axpy(y_stage, y, h, {{kA21, &k1}});
        rhs(t + kC2 * h, y_stage, k2);
        axpy(y_stage, y, h, {{kA31, &k1}, {kA32, &k2}});
        rhs(t + kC3 * h, y_stage, k3);
        axpy(y_stage, y, h, {{kA41, &k1}, {kA42, &k2}, {kA43, &k3}});
        rhs(t + kC4 * h, y_stage, k4);
        axpy(y_stage, y, h, {{kA51, &k1}, {kA52, &k2}, {kA53, &k3}, {kA54, &k4}});
        rhs(t + kC5 * h, y_stage, k5);
        axpy(y_stage, y, h, {{kA61, &k1}, {kA62, &k2}, {kA63, &k3}, {kA64, &k4}, {kA65, &k5}});
        rhs(t + h, y_stage, k6);
        axpy(y_next, y, h, {{kB1, &k1}, {kB3, &k3}, {kB4, &k4}, {kB5, &k5}, {kB6, &k6}});
        rhs(t + h, y_next, k7); // FSAL

        axpy(err, State(dim, {0.0, 0.0}), h,
             {{kE1, &k1}, {kE3, &k3}, {kE4, &k4}, {kE5, &k5}, {kE6, &k6}, {kE7, &k7}});
        const double err_ratio = error_norm(err, y, y_next, cfg.abs_tol, cfg.rel_tol);

        if (err_ratio <= 1.0) {
            // Emit every requested time inside (t, t+h].
            while (next_out < outputs.size() && outputs[next_out] <= t + h + 1e-15 * span) {
                const double theta = std::clamp((outputs[next_out] - t) / h, 0.0, 1.0);
                result.outputs.push_back(hermite_interpolate(theta, h, y, y_next, k1, k7));
                ++next_out;
            }
            t += h;
            y.swap(y_next);
            k1.swap(k7);
            note_tail(y);

            // 0.8 rather than the usual 0.9: the cubic Hermite dense output
            // error scales with h^4 and eats most of the drift budget, so
            // the steps run slightly below the controller target.
            double factor = 0.8 * std::pow(std::max(err_ratio, 1e-10), -0.2);
            factor = std::clamp(factor, 0.2, last_rejected ? 1.0 : 5.0);
            h *= factor;
            if (cfg.max_step > 0.0) h = std::min(h, cfg.max_step);
            last_rejected = false;
        } else {
            h *= std::clamp(0.9 * std::pow(err_ratio, -0.2), 0.1, 0.9);
            last_rejected = true;
        }
    }

    for (; next_out < outputs.size(); ++next_out) result.outputs.push_back(y);
    return result;
}

int pick_truncation(const MultilevelSystem& system, double t_max,
                    const IntegratorSettings& cfg) {
    if (cfg.truncation_levels > 0) return std::max(cfg.truncation_levels, 2);
    if (system.truncation_hint() > 0) return std::max(system.truncation_hint(), 2);
    // Harmonic-type default: mean quanta bounded by t_max^2.
    return std::max(poisson_truncation_levels(t_max * t_max), 2);
}

// Transitions inside the retained ladder are 1..levels-1; the coupling out
// of the top retained level is dropped (that is the truncation).
LadderRhs make_rhs(const MultilevelSystem& system, int levels) {
    LadderRhs rhs;
    rhs.f.resize(static_cast<size_t>(levels), 0.0);
    rhs.eps.resize(static_cast<size_t>(levels), 0.0);
    for (int n = 1; n < levels; ++n) {
        rhs.f[static_cast<size_t>(n)] = system.f(n);
        rhs.eps[static_cast<size_t>(n)] = system.eps(n);
    }
    return rhs;
}

void validate_grid(std::span<const double> times) {
    if (times.empty()) throw std::invalid_argument("oracle: empty time grid");
    if (times.front() != 0.0) throw std::invalid_argument("oracle: time grid must start at 0");
    if (!std::is_sorted(times.begin(), times.end())) {
        throw std::invalid_argument("oracle: time grid must be sorted");
    }
}

} // namespace

AmplitudeTrajectory integrate(const MultilevelSystem& system,
                              std::span<const double> times,
                              const IntegratorSettings& settings) {
    validate_grid(times);
    const double t_max = times.back();

    int levels;
    bool tail_checked;
    if (system.finite()) {
        levels = *system.top_level() + 1;
        tail_checked = false;
    } else {
        levels = pick_truncation(system, t_max, settings);
        tail_checked = true;
    }

    for (int attempt = 0;; ++attempt) {
        LadderRhs rhs = make_rhs(system, levels);
        State y0(static_cast<size_t>(levels), {0.0, 0.0});
        y0[0] = 1.0;
        CoreResult core = integrate_core(rhs, std::move(y0), t_max, times, settings);

        if (!tail_checked || core.max_tail <= settings.tail_guard) {
            AmplitudeTrajectory trajectory;
            trajectory.times.assign(times.begin(), times.end());
            trajectory.amps = std::move(core.outputs);
            trajectory.provenance = Provenance::Oracle;
            trajectory.system = system;
            return trajectory;
        }
        if (attempt >= settings.max_truncation_retries) {
            throw TruncationError("oracle: tail population " + std::to_string(core.max_tail) +
                                  " above guard after " + std::to_string(attempt + 1) +
                                  " truncation attempts (levels = " + std::to_string(levels) +
                                  ")");
        }
        levels = static_cast<int>(std::ceil(1.5 * levels));
    }
}

double norm_drift(const AmplitudeTrajectory& trajectory) {
    double drift = 0.0;
    for (const auto& row : trajectory.amps) {
        double norm = 0.0;
        for (const auto& a : row) norm += std::norm(a);
        drift = std::max(drift, std::abs(norm - 1.0));
    }
    return drift;
}

double reversibility_defect(const MultilevelSystem& system, double t_end,
                            const IntegratorSettings& settings) {
    if (t_end <= 0.0) throw std::invalid_argument("reversibility_defect: t_end must be > 0");

    const std::vector<double> forward_times{0.0, t_end};
    AmplitudeTrajectory forward = integrate(system, forward_times, settings);
    const State& at_end = forward.amps.back();
    const int levels = static_cast<int>(at_end.size());

    LadderRhs back = make_rhs(system, levels);
    back.sign = -1.0;
    back.t_ref = t_end;
    const std::vector<double> back_times{0.0, t_end};
    CoreResult returned = integrate_core(back, at_end, t_end, back_times, settings);

    double defect = 0.0;
    const State& final_state = returned.outputs.back();
    for (int n = 0; n < levels; ++n) {
        const std::complex<double> expected = (n == 0) ? 1.0 : 0.0;
        defect = std::max(defect, std::abs(final_state[static_cast<size_t>(n)] - expected));
    }
    return defect;
}

} // namespace cohex
