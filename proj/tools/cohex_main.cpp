// Command-line front end: scenario runs, parameter sweeps, closed-form vs
// oracle comparison reports, CSV + plot-script emission.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical/accuracy error.

#include "cohex/errors.hpp"
#include "cohex/scenario.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace {

struct CommonFlags {
    std::map<std::string, std::string> values;
    std::vector<std::pair<std::string, CLI::Option*>> order;
    std::string config_path;
    std::string preset;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    auto add = [&](const std::string& key, const std::string& flag, const std::string& desc) {
        flags.order.emplace_back(key, cmd->add_option(flag, flags.values[key], desc));
    };
    add("scenario", "--scenario",
        "kravchuk | harmonic_resonant | harmonic_detuned | two_level | custom_family");
    add("N", "--N", "number of transitions (the ladder has N+1 levels)");
    add("epsilon", "--epsilon", "dimensionless frequency detuning");
    add("t_max", "--t-max", "end of the time grid (> 0); default 30");
    add("t_steps", "--t-steps", "uniform steps; the grid has t-steps+1 points; default 600");
    add("method", "--method", "closed_form | spectral | oracle | compare_all");
    add("output_dir", "--output-dir", "artifact directory; default cohex_out");
    add("rel_tol", "--rel-tol", "oracle relative tolerance (default 1e-10)");
    add("abs_tol", "--abs-tol", "oracle absolute tolerance (default 1e-12)");
    add("family", "--family", "custom_family choice: hermite | charlier | kravchuk");
    add("mu", "--mu", "Charlier family parameter (mu > 0)");
    add("p", "--p", "Kravchuk family weight parameter (0 < p < 1)");
    cmd->add_option("--config", flags.config_path,
                    "key=value config file; explicit flags override it");
    cmd->add_option("--preset", flags.preset, "figure presets: fig2a (N=20, eps=0) or "
                                              "fig2b (N=20, eps=0.5)");
}

// Layering: built-in defaults < config file < preset < explicit flags.
cohex::ScenarioConfig build_config(const CommonFlags& flags) {
    cohex::ScenarioConfig config;
    config.t_max = 30.0;
    config.t_steps = 600;
    config.output_dir = "cohex_out";

    if (!flags.config_path.empty()) {
        for (const auto& [key, value] : cohex::parse_config_file(flags.config_path)) {
            cohex::apply_key_value(config, key, value);
        }
    }
    if (!flags.preset.empty()) cohex::apply_preset(config, flags.preset);
    for (const auto& [key, option] : flags.order) {
        if (option->count() > 0) cohex::apply_key_value(config, key, flags.values.at(key));
    }
    return config;
}

void report_run(const cohex::RunArtifacts& artifacts) {
    std::cout << "wrote " << artifacts.populations_csv.string() << "\n";
    std::cout << "wrote " << artifacts.observables_csv.string() << "\n";
    if (artifacts.comparison_csv) {
        std::cout << "wrote " << artifacts.comparison_csv->string() << "\n";
    }
    std::cout << "wrote " << artifacts.plot_script.string() << "\n";
    if (artifacts.period) {
        std::cout << "period estimate: " << *artifacts.period << "\n";
    }
    std::cout << "max mean quanta: " << artifacts.max_mean_quanta << "\n";
    if (artifacts.compared) {
        std::cout << "max |rho - rho_oracle|: " << artifacts.max_pop_err_vs_oracle << "\n";
        std::cout << "max |a - a_oracle|:     " << artifacts.max_amp_err_vs_oracle << "\n";
        std::cout << "oracle norm drift:      " << artifacts.oracle_norm_drift << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohex: coherent excitation dynamics of multilevel quantum ladders"};
    app.require_subcommand(1);

    CLI::App* run_cmd = app.add_subcommand("run", "run one scenario and write CSV artifacts");
    CommonFlags run_flags;
    add_common_flags(run_cmd, run_flags);

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "run a scenario once per parameter value");
    CommonFlags sweep_flags;
    add_common_flags(sweep_cmd, sweep_flags);
    std::string vary;
    std::vector<double> values;
    sweep_cmd->add_option("--vary", vary, "swept parameter: N or epsilon")->required();
    sweep_cmd->add_option("--values", values, "comma-separated sweep values")
        ->required()
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) {
            report_run(cohex::run(build_config(run_flags)));
        } else {
            const cohex::SweepArtifacts artifacts =
                cohex::sweep(build_config(sweep_flags), vary, values);
            std::cout << "wrote " << artifacts.summary_csv.string() << "\n";
            for (const auto& row : artifacts.rows) {
                std::cout << vary << " = " << row.value
                          << ": max mean quanta = " << row.max_mean_quanta
                          << ", max pop err vs oracle = " << row.max_pop_err_vs_oracle << "\n";
            }
        }
        return 0;
    } catch (const cohex::ConfigError& e) {
        std::cerr << "config error (" << e.field() << "): " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
}
