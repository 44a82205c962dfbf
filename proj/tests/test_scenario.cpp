#include "cohex/scenario.hpp"

#include "cohex/closed_form.hpp"
#include "cohex/csv.hpp"
#include "cohex/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

using namespace cohex;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ScenarioConfig small_kravchuk() {
    ScenarioConfig config;
    config.scenario = ScenarioKind::Kravchuk;
    config.n_levels = 20;
    config.epsilon = 0.0;
    config.t_max = 6.0;
    config.t_steps = 60;
    return config;
}

} // namespace

TEST_CASE("validation names the offending field") {
    ScenarioConfig config = small_kravchuk();
    SUBCASE("t_max") {
        config.t_max = 0.0;
        CHECK_THROWS_WITH_AS(validate(config), doctest::Contains("t_max"), ConfigError);
    }
    SUBCASE("t_steps") {
        config.t_steps = 1;
        try {
            validate(config);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.field() == "t_steps");
        }
    }
    SUBCASE("N") {
        config.n_levels = 0;
        try {
            validate(config);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.field() == "N");
        }
    }
    SUBCASE("eps for the detuned ladder") {
        config.scenario = ScenarioKind::HarmonicDetuned;
        config.epsilon = 0.0;
        CHECK_THROWS_AS(validate(config), ConfigError);
    }
    SUBCASE("custom family needs a family") {
        config.scenario = ScenarioKind::CustomFamily;
        config.family.reset();
        CHECK_THROWS_AS(validate(config), ConfigError);
    }
}

TEST_CASE("string round trips") {
    for (const std::string name :
         {"kravchuk", "harmonic_resonant", "harmonic_detuned", "two_level", "custom_family"}) {
        CHECK(to_string(scenario_from_string(name)) == name);
    }
    for (const std::string name : {"closed_form", "spectral", "oracle", "compare_all"}) {
        CHECK(to_string(method_from_string(name)) == name);
    }
    CHECK_THROWS_AS(scenario_from_string("bogus"), ConfigError);
    CHECK_THROWS_AS(method_from_string("bogus"), ConfigError);
}

TEST_CASE("presets pin the figure parameters") {
    ScenarioConfig config = small_kravchuk();
    apply_preset(config, "fig2a");
    CHECK(config.n_levels == 20);
    CHECK(config.epsilon == 0.0);
    apply_preset(config, "fig2b");
    CHECK(config.epsilon == 0.5);
    CHECK_THROWS_AS(apply_preset(config, "fig2c"), ConfigError);
}

TEST_CASE("config files parse and flags override") {
    const auto dir = fresh_dir("cohex_cfg_test");
    std::filesystem::create_directories(dir);
    const auto file = dir / "scenario.cfg";
    {
        std::ofstream out(file);
        out << "# comment line\n";
        out << "scenario = kravchuk\n";
        out << "N = 12\n";
        out << "epsilon = 0.25   # trailing comment\n";
        out << "t_max = 9\n";
        out << "t_steps = 90\n";
        out << "method = closed_form\n";
    }
    ScenarioConfig config;
    for (const auto& [key, value] : parse_config_file(file)) {
        apply_key_value(config, key, value);
    }
    CHECK(config.scenario == ScenarioKind::Kravchuk);
    CHECK(config.n_levels == 12);
    CHECK(config.epsilon == 0.25);
    CHECK(config.t_steps == 90);

    apply_key_value(config, "epsilon", "0.5"); // a later flag wins
    CHECK(config.epsilon == 0.5);

    CHECK_THROWS_AS(apply_key_value(config, "bogus_key", "1"), ConfigError);
    CHECK_THROWS_AS(apply_key_value(config, "t_max", "abc"), ConfigError);
    CHECK_THROWS_AS(parse_config_file(dir / "missing.cfg"), ConfigError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("two-level run writes sin^2 populations") {
    ScenarioConfig config;
    config.scenario = ScenarioKind::TwoLevel;
    config.epsilon = 0.0;
    config.t_max = 6.2832;
    config.t_steps = 100;
    config.output_dir = fresh_dir("cohex_twolevel_run");
    const RunArtifacts artifacts = run(config);

    const csv::Table table = csv::read(artifacts.populations_csv);
    REQUIRE(table.header == std::vector<std::string>{"t", "n", "rho"});
    REQUIRE(table.rows.size() == 2 * 101);
    for (const auto& row : table.rows) {
        const double t = row[0];
        const double s2 = std::sin(t) * std::sin(t);
        if (row[1] == 1.0) CHECK(row[2] == doctest::Approx(s2).epsilon(1e-12));
        if (row[1] == 0.0) CHECK(row[2] == doctest::Approx(1.0 - s2).epsilon(1e-12));
    }
    std::filesystem::remove_all(config.output_dir);
}

TEST_CASE("compare_all emits a comparison that beats the acceptance budget") {
    ScenarioConfig config = small_kravchuk();
    config.method = Method::CompareAll;
    config.output_dir = fresh_dir("cohex_compare_run");
    const RunArtifacts artifacts = run(config);

    REQUIRE(artifacts.comparison_csv.has_value());
    CHECK(artifacts.compared);
    CHECK(artifacts.max_pop_err_vs_oracle < 1e-6);
    CHECK(artifacts.max_amp_err_vs_oracle < 1e-6);
    CHECK(artifacts.oracle_norm_drift < 1e-8);

    const csv::Table table = csv::read(*artifacts.comparison_csv);
    REQUIRE(table.header ==
            std::vector<std::string>{"t", "max_amp_abs_err", "max_pop_abs_err", "norm_drift"});
    REQUIRE(table.rows.size() == 61);
    CHECK(std::filesystem::exists(artifacts.plot_script));
    std::filesystem::remove_all(config.output_dir);
}

TEST_CASE("identical configs produce byte-identical artifacts") {
    ScenarioConfig config = small_kravchuk();
    config.epsilon = 0.5;
    config.t_steps = 40;
    config.output_dir = fresh_dir("cohex_det_a");
    const RunArtifacts first = run(config);
    config.output_dir = fresh_dir("cohex_det_b");
    const RunArtifacts second = run(config);
    CHECK(slurp(first.populations_csv) == slurp(second.populations_csv));
    CHECK(slurp(first.observables_csv) == slurp(second.observables_csv));
    std::filesystem::remove_all(first.populations_csv.parent_path());
    std::filesystem::remove_all(second.populations_csv.parent_path());
}

TEST_CASE("csv values read back exactly at the emitted precision") {
    ScenarioConfig config = small_kravchuk();
    config.t_steps = 25;
    config.output_dir = fresh_dir("cohex_roundtrip");
    const RunArtifacts artifacts = run(config);

    const std::vector<double> times = time_grid(config.t_max, config.t_steps);
    const AmplitudeTrajectory reference = closed_form_trajectory(config, times);
    const csv::Table table = csv::read(artifacts.populations_csv);
    REQUIRE(table.rows.size() == times.size() * reference.amps[0].size());
    size_t row = 0;
    for (size_t k = 0; k < times.size(); ++k) {
        for (size_t n = 0; n < reference.amps[k].size(); ++n, ++row) {
            CHECK(table.rows[row][0] == times[k]);
            CHECK(table.rows[row][1] == double(n));
            CHECK(table.rows[row][2] == std::norm(reference.amps[k][n]));
        }
    }
    std::filesystem::remove_all(config.output_dir);
}

TEST_CASE("sweeps") {
    SUBCASE("invalid vary and empty values are rejected") {
        ScenarioConfig config = small_kravchuk();
        config.output_dir = fresh_dir("cohex_sweep_bad");
        CHECK_THROWS_AS(sweep(config, "gamma", std::vector<double>{1.0}), ConfigError);
        CHECK_THROWS_AS(sweep(config, "epsilon", std::vector<double>{}), ConfigError);
        std::filesystem::remove_all(config.output_dir);
    }
    SUBCASE("epsilon sweep reproduces the excitation ceiling") {
        ScenarioConfig config = small_kravchuk();
        config.t_max = 30.0;
        config.t_steps = 2000;
        config.output_dir = fresh_dir("cohex_sweep_eps");
        const std::vector<double> values{0.0, 0.25, 0.5, 1.0};
        const SweepArtifacts artifacts = sweep(config, "epsilon", values);
        REQUIRE(artifacts.rows.size() == 4);
        for (size_t i = 0; i < values.size(); ++i) {
            const double eps = values[i];
            const double ceiling = 4.0 / (4.0 / 20.0 + eps * eps);
            CHECK(std::abs(artifacts.rows[i].max_mean_quanta - ceiling) < 1e-6);
        }
        const csv::Table summary = csv::read(artifacts.summary_csv);
        REQUIRE(summary.header ==
                std::vector<std::string>{"value", "period", "max_mean_quanta",
                                         "max_pop_err_vs_oracle"});
        REQUIRE(summary.rows.size() == 4);
        std::filesystem::remove_all(config.output_dir);
    }
    SUBCASE("N sweep includes the two-level member") {
        ScenarioConfig config = small_kravchuk();
        config.t_max = 10.0;
        config.t_steps = 400;
        config.output_dir = fresh_dir("cohex_sweep_n");
        const std::vector<double> values{1.0, 2.0, 20.0};
        const SweepArtifacts artifacts = sweep(config, "N", values);
        REQUIRE(artifacts.rows.size() == 3);
        // N = 1 at resonance: period pi, ceiling 1 (the textbook two-level values)
        REQUIRE(artifacts.rows[0].period.has_value());
        CHECK(std::abs(*artifacts.rows[0].period - std::numbers::pi) < 1e-3);
        CHECK(artifacts.rows[0].max_mean_quanta == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(artifacts.rows[0].max_pop_err_vs_oracle < 1e-6);
        // directories per entry
        CHECK(std::filesystem::exists(config.output_dir / "N_1" / "populations.csv"));
        CHECK(std::filesystem::exists(config.output_dir / "N_20" / "comparison.csv"));
        std::filesystem::remove_all(config.output_dir);
    }
}
