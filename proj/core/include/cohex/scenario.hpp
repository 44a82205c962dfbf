#pragma once

#include "cohex/oracle.hpp"
#include "cohex/polynomials.hpp"
#include "cohex/trajectory.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cohex {

enum class ScenarioKind { Kravchuk, HarmonicResonant, HarmonicDetuned, TwoLevel, CustomFamily };
enum class Method { ClosedForm, Spectral, Oracle, CompareAll };

/// One simulation run as described on the command line or in a config file.
struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::Kravchuk;
    int n_levels = 0;    // N, where applicable
    double epsilon = 0.0;
    double t_max = 0.0;
    int t_steps = 0;     // uniform steps; the grid has t_steps + 1 points
    Method method = Method::ClosedForm;
    std::filesystem::path output_dir = ".";
    IntegratorSettings tolerances;

    // custom_family extras
    std::optional<FamilyKind> family;
    double mu = 0.0; // Charlier
    double p = 0.0;  // Kravchuk
};

ScenarioKind scenario_from_string(const std::string& name);
Method method_from_string(const std::string& name);
FamilyKind family_from_string(const std::string& name);
std::string to_string(ScenarioKind scenario);
std::string to_string(Method method);
std::string to_string(FamilyKind family);

/// fig2a: N=20, eps=0; fig2b: N=20, eps=0.5. Both select the finite-ladder
/// scenario; grid and method are left for the caller.
void apply_preset(ScenarioConfig& config, const std::string& preset);

/// Applies one config-file key (same spelling as the long CLI flags, e.g.
/// "t_max", "rel_tol"). Throws ConfigError for unknown keys or bad values.
void apply_key_value(ScenarioConfig& config, const std::string& key, const std::string& value);

/// Plain-text key=value file; '#' starts a comment.
std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path);

/// Throws ConfigError naming the offending field.
void validate(const ScenarioConfig& config);

struct RunArtifacts {
    std::filesystem::path populations_csv;
    std::filesystem::path observables_csv;
    std::optional<std::filesystem::path> comparison_csv;
    std::filesystem::path plot_script;

    std::optional<double> period;
    double max_mean_quanta = 0.0;
    // Populated by compare_all:
    double max_pop_err_vs_oracle = 0.0;
    double max_amp_err_vs_oracle = 0.0;
    double oracle_norm_drift = 0.0;
    bool compared = false;
};

/// Executes one scenario: computes the requested trajectories, writes
/// populations.csv / observables.csv (+ comparison.csv for compare_all) and
/// a plot script into output_dir.
RunArtifacts run(const ScenarioConfig& config);

struct SweepRow {
    double value = 0.0;
    std::optional<double> period;
    double max_mean_quanta = 0.0;
    double max_pop_err_vs_oracle = 0.0;
};

struct SweepArtifacts {
    std::filesystem::path summary_csv;
    std::vector<SweepRow> rows;
};

/// Runs the base scenario once per value of the varied parameter ("N" or
/// "epsilon"), each into its own subdirectory with a full comparison
/// against the oracle, then writes summary.csv.
SweepArtifacts sweep(const ScenarioConfig& base, const std::string& vary,
                     std::span<const double> values);

// Building blocks shared with tests: scenario -> model objects/trajectories.
std::vector<double> time_grid(double t_max, int t_steps);
MultilevelSystem scenario_system(const ScenarioConfig& config);
AmplitudeTrajectory closed_form_trajectory(const ScenarioConfig& config,
                                           std::span<const double> times);
AmplitudeTrajectory spectral_scenario_trajectory(const ScenarioConfig& config,
                                                 std::span<const double> times);
PopulationDistribution tagged_populations(const ScenarioConfig& config,
                                          const AmplitudeTrajectory& trajectory);

} // namespace cohex
