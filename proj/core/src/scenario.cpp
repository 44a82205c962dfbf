#include "cohex/scenario.hpp"

#include "cohex/closed_form.hpp"
#include "cohex/csv.hpp"
#include "cohex/errors.hpp"
#include "cohex/observables.hpp"
#include "cohex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>

namespace cohex {

namespace {

const char* kPlotScript = R"PY(#!/usr/bin/env python3
"""Render populations.csv (columns t,n,rho) as a level-vs-time heatmap."""
import csv
import sys
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

here = Path(__file__).resolve().parent
path = Path(sys.argv[1]) if len(sys.argv) > 1 else here / "populations.csv"

ts, ns, rhos = [], [], []
with open(path, newline="") as fh:
    for row in csv.DictReader(fh):
        ts.append(float(row["t"]))
        ns.append(int(float(row["n"])))
        rhos.append(float(row["rho"]))

t_axis = sorted(set(ts))
n_axis = sorted(set(ns))
t_index = {t: i for i, t in enumerate(t_axis)}
grid = [[0.0] * len(t_axis) for _ in n_axis]
for t, n, rho in zip(ts, ns, rhos):
    grid[n][t_index[t]] = rho

fig, ax = plt.subplots(figsize=(8, 4.5))
mesh = ax.pcolormesh(t_axis, n_axis, grid, shading="nearest", cmap="viridis")
fig.colorbar(mesh, ax=ax, label="population")
ax.set_xlabel("t")
ax.set_ylabel("level n")
ax.set_title(path.parent.name or "populations")
out = path.with_suffix(".png")
fig.tight_layout()
fig.savefig(out, dpi=150)
print(out)
)PY";

std::string short_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return buf;
}

KravchukParameters scenario_kravchuk(const ScenarioConfig& config) {
    switch (config.scenario) {
    case ScenarioKind::Kravchuk:
        return kravchuk_from_detuning(config.n_levels, config.epsilon);
    case ScenarioKind::TwoLevel:
        return kravchuk_from_detuning(1, config.epsilon);
    case ScenarioKind::CustomFamily: {
        KravchukParameters params;
        params.N = config.n_levels;
        params.p = config.p;
        params.q = 1.0 - config.p;
        params.r = 1.0 / std::sqrt(params.p * params.q * params.N);
        params.epsilon = params.r * (params.p - params.q);
        return params;
    }
    default:
        throw std::logic_error("scenario_kravchuk: not a finite-ladder scenario");
    }
}

// Number of retained levels for the infinite-ladder scenarios, from the
// Poisson mean bound <n> <= min(t_max^2, (2/eps)^2).
int scenario_levels(const ScenarioConfig& config) {
    switch (config.scenario) {
    case ScenarioKind::Kravchuk:
        return config.n_levels + 1;
    case ScenarioKind::TwoLevel:
        return 2;
    case ScenarioKind::HarmonicResonant:
        return poisson_truncation_levels(config.t_max * config.t_max);
    case ScenarioKind::HarmonicDetuned: {
        const double cap = 4.0 / (config.epsilon * config.epsilon);
        return poisson_truncation_levels(std::min(config.t_max * config.t_max, cap));
    }
    case ScenarioKind::CustomFamily:
        switch (*config.family) {
        case FamilyKind::Kravchuk: return config.n_levels + 1;
        case FamilyKind::Hermite: return poisson_truncation_levels(config.t_max * config.t_max);
        case FamilyKind::Charlier:
            return poisson_truncation_levels(
                std::min(config.t_max * config.t_max, 4.0 * config.mu));
        }
    }
    throw std::logic_error("scenario_levels: unknown scenario");
}

PolynomialFamily scenario_family(const ScenarioConfig& config) {
    switch (config.scenario) {
    case ScenarioKind::Kravchuk:
    case ScenarioKind::TwoLevel: {
        const KravchukParameters params = scenario_kravchuk(config);
        return PolynomialFamily::kravchuk(params.p, params.N);
    }
    case ScenarioKind::HarmonicResonant:
        return PolynomialFamily::hermite();
    case ScenarioKind::HarmonicDetuned:
        return PolynomialFamily::charlier(1.0 / (config.epsilon * config.epsilon));
    case ScenarioKind::CustomFamily:
        switch (*config.family) {
        case FamilyKind::Hermite: return PolynomialFamily::hermite();
        case FamilyKind::Charlier: return PolynomialFamily::charlier(config.mu);
        case FamilyKind::Kravchuk: return PolynomialFamily::kravchuk(config.p, config.n_levels);
        }
    }
    throw std::logic_error("scenario_family: unknown scenario");
}

double refined_series_max(std::span<const double> times, std::span<const double> values) {
    if (values.empty()) return 0.0;
    size_t best = 0;
    for (size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) best = i;
    }
    if (best == 0 || best + 1 >= values.size()) return values[best];
    // Parabola through the discrete peak; the vertex value beats the grid
    // resolution for smooth series.
    const double x0 = times[best - 1] - times[best];
    const double x2 = times[best + 1] - times[best];
    const double d0 = (values[best - 1] - values[best]) / x0;
    const double d2 = (values[best + 1] - values[best]) / x2;
    const double a = (d0 - d2) / (x0 - x2);
    if (!(a < 0.0)) return values[best];
    const double b = d0 - a * x0;
    const double offset = -0.5 * b / a;
    if (std::abs(offset) > std::max(std::abs(x0), std::abs(x2))) return values[best];
    return values[best] + a * offset * offset + b * offset;
}

} // namespace

ScenarioKind scenario_from_string(const std::string& name) {
    if (name == "kravchuk") return ScenarioKind::Kravchuk;
    if (name == "harmonic_resonant") return ScenarioKind::HarmonicResonant;
    if (name == "harmonic_detuned") return ScenarioKind::HarmonicDetuned;
    if (name == "two_level") return ScenarioKind::TwoLevel;
    if (name == "custom_family") return ScenarioKind::CustomFamily;
    throw ConfigError("scenario", "unknown scenario '" + name + "'");
}

Method method_from_string(const std::string& name) {
    if (name == "closed_form") return Method::ClosedForm;
    if (name == "spectral") return Method::Spectral;
    if (name == "oracle") return Method::Oracle;
    if (name == "compare_all") return Method::CompareAll;
    throw ConfigError("method", "unknown method '" + name + "'");
}

FamilyKind family_from_string(const std::string& name) {
    if (name == "hermite") return FamilyKind::Hermite;
    if (name == "charlier") return FamilyKind::Charlier;
    if (name == "kravchuk") return FamilyKind::Kravchuk;
    throw ConfigError("family", "unknown family '" + name + "'");
}

std::string to_string(ScenarioKind scenario) {
    switch (scenario) {
    case ScenarioKind::Kravchuk: return "kravchuk";
    case ScenarioKind::HarmonicResonant: return "harmonic_resonant";
    case ScenarioKind::HarmonicDetuned: return "harmonic_detuned";
    case ScenarioKind::TwoLevel: return "two_level";
    case ScenarioKind::CustomFamily: return "custom_family";
    }
    return "?";
}

std::string to_string(Method method) {
    switch (method) {
    case Method::ClosedForm: return "closed_form";
    case Method::Spectral: return "spectral";
    case Method::Oracle: return "oracle";
    case Method::CompareAll: return "compare_all";
    }
    return "?";
}

std::string to_string(FamilyKind family) {
    switch (family) {
    case FamilyKind::Hermite: return "hermite";
    case FamilyKind::Charlier: return "charlier";
    case FamilyKind::Kravchuk: return "kravchuk";
    }
    return "?";
}

void apply_preset(ScenarioConfig& config, const std::string& preset) {
    if (preset == "fig2a") {
        config.scenario = ScenarioKind::Kravchuk;
        config.n_levels = 20;
        config.epsilon = 0.0;
    } else if (preset == "fig2b") {
        config.scenario = ScenarioKind::Kravchuk;
        config.n_levels = 20;
        config.epsilon = 0.5;
    } else {
        throw ConfigError("preset", "unknown preset '" + preset + "' (use fig2a or fig2b)");
    }
}

void apply_key_value(ScenarioConfig& config, const std::string& key, const std::string& value) {
    auto as_double = [&](const char* field) {
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (end == value.c_str() || *end != '\0') {
            throw ConfigError(field, std::string(field) + ": not a number: '" + value + "'");
        }
        return v;
    };
    auto as_int = [&](const char* field) {
        const double v = as_double(field);
        if (v != std::floor(v)) {
            throw ConfigError(field, std::string(field) + ": not an integer: '" + value + "'");
        }
        return static_cast<int>(v);
    };

    if (key == "scenario") config.scenario = scenario_from_string(value);
    else if (key == "N") config.n_levels = as_int("N");
    else if (key == "epsilon") config.epsilon = as_double("epsilon");
    else if (key == "t_max") config.t_max = as_double("t_max");
    else if (key == "t_steps") config.t_steps = as_int("t_steps");
    else if (key == "method") config.method = method_from_string(value);
    else if (key == "output_dir") config.output_dir = value;
    else if (key == "rel_tol") config.tolerances.rel_tol = as_double("rel_tol");
    else if (key == "abs_tol") config.tolerances.abs_tol = as_double("abs_tol");
    else if (key == "family") config.family = family_from_string(value);
    else if (key == "mu") config.mu = as_double("mu");
    else if (key == "p") config.p = as_double("p");
    else if (key == "preset") apply_preset(config, value);
    else throw ConfigError(key, "unknown config key '" + key + "'");
}

std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open config file " + path.string());

    std::map<std::string, std::string> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config", "config file line " + std::to_string(line_no) +
                                            ": expected key=value");
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return entries;
}

void validate(const ScenarioConfig& config) {
    if (!(config.t_max > 0.0)) throw ConfigError("t_max", "t_max must be > 0");
    if (config.t_steps < 2) throw ConfigError("t_steps", "t_steps must be >= 2");
    if (config.output_dir.empty()) throw ConfigError("output_dir", "output_dir must be set");
    if (!(config.tolerances.rel_tol > 0.0)) throw ConfigError("rel_tol", "rel_tol must be > 0");
    if (!(config.tolerances.abs_tol > 0.0)) throw ConfigError("abs_tol", "abs_tol must be > 0");

    switch (config.scenario) {
    case ScenarioKind::Kravchuk:
        if (config.n_levels < 1) throw ConfigError("N", "kravchuk scenario needs N >= 1");
        break;
    case ScenarioKind::HarmonicResonant:
        if (config.epsilon != 0.0) {
            throw ConfigError("epsilon",
                              "harmonic_resonant is the eps = 0 case; use harmonic_detuned");
        }
        break;
    case ScenarioKind::HarmonicDetuned:
        if (config.epsilon == 0.0) {
            throw ConfigError("epsilon",
                              "harmonic_detuned needs epsilon != 0; use harmonic_resonant");
        }
        break;
    case ScenarioKind::TwoLevel:
        break;
    case ScenarioKind::CustomFamily:
        if (!config.family) throw ConfigError("family", "custom_family needs --family");
        switch (*config.family) {
        case FamilyKind::Charlier:
            if (!(config.mu > 0.0)) throw ConfigError("mu", "charlier needs mu > 0");
            break;
        case FamilyKind::Kravchuk:
            if (config.n_levels < 1) throw ConfigError("N", "kravchuk family needs N >= 1");
            if (!(config.p > 0.0 && config.p < 1.0)) {
                throw ConfigError("p", "kravchuk family needs p in (0,1)");
            }
            break;
        case FamilyKind::Hermite:
            break;
        }
        break;
    }
}

std::vector<double> time_grid(double t_max, int t_steps) {
    std::vector<double> times(static_cast<size_t>(t_steps) + 1);
    for (int k = 0; k <= t_steps; ++k) {
        times[static_cast<size_t>(k)] = t_max * static_cast<double>(k) / t_steps;
    }
    times.front() = 0.0;
    return times;
}

MultilevelSystem scenario_system(const ScenarioConfig& config) {
    switch (config.scenario) {
    case ScenarioKind::Kravchuk:
    case ScenarioKind::TwoLevel: {
        const KravchukParameters params = scenario_kravchuk(config);
        return from_family(PolynomialFamily::kravchuk(params.p, params.N));
    }
    case ScenarioKind::HarmonicResonant:
    case ScenarioKind::HarmonicDetuned: {
        const double eps = config.scenario == ScenarioKind::HarmonicDetuned ? config.epsilon : 0.0;
        auto dipole = [](int n) { return n > 0 ? std::sqrt(static_cast<double>(n)) : 0.0; };
        auto detuning = [eps](int) { return eps; };
        return MultilevelSystem(dipole, detuning, std::nullopt, scenario_levels(config));
    }
    case ScenarioKind::CustomFamily: {
        MultilevelSystem system = from_family(scenario_family(config));
        return system.finite() ? system
                               : system.with_truncation_hint(scenario_levels(config));
    }
    }
    throw std::logic_error("scenario_system: unknown scenario");
}

AmplitudeTrajectory closed_form_trajectory(const ScenarioConfig& config,
                                           std::span<const double> times) {
    AmplitudeTrajectory trajectory;
    trajectory.times.assign(times.begin(), times.end());
    trajectory.provenance = Provenance::ClosedForm;
    trajectory.system = scenario_system(config);
    trajectory.amps.reserve(times.size());

    const FamilyKind kind = config.scenario == ScenarioKind::CustomFamily
                                ? *config.family
                                : (config.scenario == ScenarioKind::HarmonicResonant
                                       ? FamilyKind::Hermite
                                       : (config.scenario == ScenarioKind::HarmonicDetuned
                                              ? FamilyKind::Charlier
                                              : FamilyKind::Kravchuk));

    switch (kind) {
    case FamilyKind::Kravchuk: {
        const KravchukParameters params = scenario_kravchuk(config);
        for (double t : times) trajectory.amps.push_back(kravchuk_amplitudes(params, t));
        break;
    }
    case FamilyKind::Hermite: {
        const int n_max = scenario_levels(config) - 1;
        for (double t : times) {
            trajectory.amps.push_back(harmonic_resonant_amplitudes(t, n_max));
        }
        break;
    }
    case FamilyKind::Charlier: {
        const double eps = config.scenario == ScenarioKind::HarmonicDetuned
                               ? config.epsilon
                               : 1.0 / std::sqrt(config.mu);
        const int n_max = scenario_levels(config) - 1;
        for (double t : times) {
            trajectory.amps.push_back(harmonic_detuned_amplitudes(t, eps, n_max));
        }
        break;
    }
    }
    return trajectory;
}

AmplitudeTrajectory spectral_scenario_trajectory(const ScenarioConfig& config,
                                                 std::span<const double> times) {
    const PolynomialFamily family = scenario_family(config);
    const int n_max = family.finite() ? *family.degree_bound() : scenario_levels(config) - 1;
    SpectralSolution solution = SpectralSolution::for_family(family);
    AmplitudeTrajectory trajectory = spectral_trajectory(solution, times, n_max);
    if (config.scenario == ScenarioKind::HarmonicDetuned && config.epsilon < 0.0) {
        // Negative detuning from the |eps| run: a_n -> (-1)^n conj(a_n),
        // the map that carries solutions across the detuning sign.
        for (auto& row : trajectory.amps) {
            for (size_t n = 0; n < row.size(); ++n) {
                row[n] = (n % 2 == 0) ? std::conj(row[n]) : -std::conj(row[n]);
            }
        }
        trajectory.system = scenario_system(config);
    }
    return trajectory;
}

PopulationDistribution tagged_populations(const ScenarioConfig& config,
                                          const AmplitudeTrajectory& trajectory) {
    PopulationDistribution pops = populations_of(trajectory);
    switch (config.scenario) {
    case ScenarioKind::TwoLevel: {
        pops.kind = DistributionKind::TwoLevel;
        const KravchukParameters params = scenario_kravchuk(config);
        for (double t : pops.times) {
            pops.parameter.push_back(kravchuk_populations(params, t).y);
        }
        break;
    }
    case ScenarioKind::Kravchuk: {
        pops.kind = DistributionKind::Binomial;
        const KravchukParameters params = scenario_kravchuk(config);
        pops.binomial_levels = params.N;
        for (double t : pops.times) {
            pops.parameter.push_back(kravchuk_populations(params, t).y);
        }
        break;
    }
    case ScenarioKind::HarmonicResonant:
        pops.kind = DistributionKind::Poisson;
        for (double t : pops.times) pops.parameter.push_back(t * t);
        break;
    case ScenarioKind::HarmonicDetuned:
        pops.kind = DistributionKind::Poisson;
        for (double t : pops.times) {
            pops.parameter.push_back(poisson_parameter(config.epsilon, t));
        }
        break;
    case ScenarioKind::CustomFamily:
        pops.kind = DistributionKind::Generic;
        break;
    }
    return pops;
}

namespace {

void write_populations_csv(const std::filesystem::path& path,
                           const PopulationDistribution& pops) {
    csv::Writer writer(path);
    writer.header({"t", "n", "rho"});
    for (size_t k = 0; k < pops.times.size(); ++k) {
        for (size_t n = 0; n < pops.pops[k].size(); ++n) {
            writer.row({pops.times[k], static_cast<double>(n), pops.pops[k][n]});
        }
    }
}

void write_observables_csv(const std::filesystem::path& path, const ObservableSeries& series) {
    csv::Writer writer(path);
    writer.header({"t", "norm", "mean_quanta"});
    for (size_t k = 0; k < series.times.size(); ++k) {
        writer.row({series.times[k], series.norm[k], series.mean_quanta[k]});
    }
}

struct Comparison {
    std::vector<double> max_amp_err; // per time, worst analytic method vs oracle
    std::vector<double> max_pop_err;
    std::vector<double> oracle_drift;
};

Comparison compare_to_oracle(const AmplitudeTrajectory& oracle,
                             std::span<const AmplitudeTrajectory* const> analytic) {
    Comparison cmp;
    const size_t n_times = oracle.times.size();
    cmp.max_amp_err.assign(n_times, 0.0);
    cmp.max_pop_err.assign(n_times, 0.0);
    cmp.oracle_drift.assign(n_times, 0.0);
    for (size_t k = 0; k < n_times; ++k) {
        double norm = 0.0;
        for (const auto& a : oracle.amps[k]) norm += std::norm(a);
        cmp.oracle_drift[k] = std::abs(norm - 1.0);
        for (const AmplitudeTrajectory* traj : analytic) {
            const size_t levels = std::min(traj->amps[k].size(), oracle.amps[k].size());
            for (size_t n = 0; n < levels; ++n) {
                const std::complex<double> ao = oracle.amps[k][n];
                const std::complex<double> aa = traj->amps[k][n];
                cmp.max_amp_err[k] = std::max(cmp.max_amp_err[k], std::abs(aa - ao));
                cmp.max_pop_err[k] =
                    std::max(cmp.max_pop_err[k], std::abs(std::norm(aa) - std::norm(ao)));
            }
        }
    }
    return cmp;
}

} // namespace

RunArtifacts run(const ScenarioConfig& config) {
    validate(config);
    std::filesystem::create_directories(config.output_dir);
    const std::vector<double> times = time_grid(config.t_max, config.t_steps);

    AmplitudeTrajectory primary;
    std::optional<AmplitudeTrajectory> spectral;
    std::optional<AmplitudeTrajectory> oracle;

    switch (config.method) {
    case Method::ClosedForm:
        primary = closed_form_trajectory(config, times);
        break;
    case Method::Spectral:
        primary = spectral_scenario_trajectory(config, times);
        break;
    case Method::Oracle:
        primary = integrate(scenario_system(config), times, config.tolerances);
        break;
    case Method::CompareAll:
        primary = closed_form_trajectory(config, times);
        spectral = spectral_scenario_trajectory(config, times);
        oracle = integrate(scenario_system(config), times, config.tolerances);
        break;
    }

    RunArtifacts artifacts;
    const PopulationDistribution pops = tagged_populations(config, primary);
    ObservableSeries series = summarize(pops);
    series.period_estimate = detect_period(series);
    artifacts.period = series.period_estimate;
    artifacts.max_mean_quanta = refined_series_max(series.times, series.mean_quanta);

    artifacts.populations_csv = config.output_dir / "populations.csv";
    write_populations_csv(artifacts.populations_csv, pops);
    artifacts.observables_csv = config.output_dir / "observables.csv";
    write_observables_csv(artifacts.observables_csv, series);

    if (config.method == Method::CompareAll) {
        const AmplitudeTrajectory* analytic[] = {&primary, &*spectral};
        const Comparison cmp = compare_to_oracle(*oracle, analytic);
        artifacts.comparison_csv = config.output_dir / "comparison.csv";
        csv::Writer writer(*artifacts.comparison_csv);
        writer.header({"t", "max_amp_abs_err", "max_pop_abs_err", "norm_drift"});
        for (size_t k = 0; k < times.size(); ++k) {
            writer.row({times[k], cmp.max_amp_err[k], cmp.max_pop_err[k], cmp.oracle_drift[k]});
            artifacts.max_amp_err_vs_oracle =
                std::max(artifacts.max_amp_err_vs_oracle, cmp.max_amp_err[k]);
            artifacts.max_pop_err_vs_oracle =
                std::max(artifacts.max_pop_err_vs_oracle, cmp.max_pop_err[k]);
            artifacts.oracle_norm_drift =
                std::max(artifacts.oracle_norm_drift, cmp.oracle_drift[k]);
        }
        artifacts.compared = true;
    }

    artifacts.plot_script = config.output_dir / "plot_populations.py";
    {
        std::ofstream script(artifacts.plot_script, std::ios::binary);
        script << kPlotScript;
    }
    std::filesystem::permissions(artifacts.plot_script,
                                 std::filesystem::perms::owner_exec |
                                     std::filesystem::perms::group_exec,
                                 std::filesystem::perm_options::add);
    return artifacts;
}

SweepArtifacts sweep(const ScenarioConfig& base, const std::string& vary,
                     std::span<const double> values) {
    if (vary != "N" && vary != "epsilon") {
        throw ConfigError("vary", "vary must be one of: N, epsilon");
    }
    if (values.empty()) throw ConfigError("values", "sweep needs a non-empty values list");

    validate(base);
    std::filesystem::create_directories(base.output_dir);

    // Entries are independent pure computations writing to disjoint
    // subdirectories; run them concurrently and aggregate in input order.
    std::vector<std::future<RunArtifacts>> futures;
    futures.reserve(values.size());
    for (double value : values) {
        ScenarioConfig entry = base;
        entry.method = Method::CompareAll;
        if (vary == "N") {
            if (value < 1.0 || value != std::floor(value)) {
                throw ConfigError("values", "N sweep values must be integers >= 1");
            }
            entry.n_levels = static_cast<int>(value);
        } else {
            entry.epsilon = value;
            if (entry.scenario == ScenarioKind::HarmonicResonant && value != 0.0) {
                entry.scenario = ScenarioKind::HarmonicDetuned;
            } else if (entry.scenario == ScenarioKind::HarmonicDetuned && value == 0.0) {
                entry.scenario = ScenarioKind::HarmonicResonant;
            }
        }
        entry.output_dir = base.output_dir / (vary + "_" + short_number(value));
        futures.push_back(std::async(std::launch::async,
                                     [entry]() { return run(entry); }));
    }

    SweepArtifacts artifacts;
    artifacts.summary_csv = base.output_dir / "summary.csv";
    csv::Writer writer(artifacts.summary_csv);
    writer.header({"value", "period", "max_mean_quanta", "max_pop_err_vs_oracle"});
    for (size_t i = 0; i < values.size(); ++i) {
        const RunArtifacts entry = futures[i].get();
        SweepRow row;
        row.value = values[i];
        row.period = entry.period;
        row.max_mean_quanta = entry.max_mean_quanta;
        row.max_pop_err_vs_oracle = entry.max_pop_err_vs_oracle;
        writer.row({row.value,
                    row.period ? *row.period : std::numeric_limits<double>::quiet_NaN(),
                    row.max_mean_quanta, row.max_pop_err_vs_oracle});
        artifacts.rows.push_back(row);
    }
    return artifacts;
}

} // namespace cohex
