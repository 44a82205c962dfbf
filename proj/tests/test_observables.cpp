#include "cohex/observables.hpp"

#include "cohex/closed_form.hpp"
#include "cohex/oracle.hpp"
#include "cohex/scenario.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cohex;

namespace {

PopulationDistribution kravchuk_series(int N, double eps, double t_max, int steps) {
    const KravchukParameters params = kravchuk_from_detuning(N, eps);
    PopulationDistribution pops;
    pops.times = time_grid(t_max, steps);
    for (double t : pops.times) pops.pops.push_back(kravchuk_populations(params, t).rho);
    return pops;
}

} // namespace

TEST_CASE("summaries of closed-form series") {
    SUBCASE("resonant ladder at t = 2 holds four quanta") {
        PopulationDistribution pops;
        pops.times = {0.0, 2.0};
        for (double t : pops.times) {
            const auto amps = harmonic_resonant_amplitudes(t, 80);
            std::vector<double> rho(amps.size());
            for (size_t n = 0; n < amps.size(); ++n) rho[n] = std::norm(amps[n]);
            pops.pops.push_back(std::move(rho));
        }
        const ObservableSeries series = summarize(pops);
        CHECK(series.mean_quanta[0] == 0.0);
        CHECK(series.mean_quanta[1] == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(series.norm[1] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(series.mean_energy_units[1] == series.mean_quanta[1]);
    }
    SUBCASE("off-resonant ceiling of the finite ladder") {
        const PopulationDistribution pops = kravchuk_series(20, 0.5, 30.0, 4000);
        const ObservableSeries series = summarize(pops);
        double max_mean = 0.0;
        for (double m : series.mean_quanta) max_mean = std::max(max_mean, m);
        CHECK(max_mean < 20.0);
        CHECK(max_mean == doctest::Approx(8.888888888888889).epsilon(2e-6));
        // the exact ceiling is hit at t = pi/r
        const KravchukParameters params = kravchuk_from_detuning(20, 0.5);
        const auto peak = kravchuk_populations(params, std::numbers::pi / params.r);
        double mean = 0.0;
        for (size_t n = 0; n < peak.rho.size(); ++n) mean += double(n) * peak.rho[n];
        CHECK(mean == doctest::Approx(8.888888888888889).epsilon(1e-12));
    }
}

TEST_CASE("distribution fits") {
    SUBCASE("binomial populations fit themselves") {
        const auto pops = kravchuk_populations(kravchuk_from_detuning(20, 0.0), 0.7);
        const DistributionFit fit = fit_distribution(pops.rho, DistributionHypothesis::Binomial);
        CHECK(fit.sup_residual < 1e-12);
        CHECK(fit.parameter == doctest::Approx(pops.y).epsilon(1e-12));
    }
    SUBCASE("oracle populations of the finite ladder stay binomial at all times") {
        const MultilevelSystem system = from_family(PolynomialFamily::kravchuk(0.5, 20));
        const std::vector<double> times = time_grid(12.0, 24);
        const AmplitudeTrajectory trajectory = integrate(system, times);
        const PopulationDistribution pops = populations_of(trajectory);
        for (const auto& row : pops.pops) {
            CHECK(fit_distribution(row, DistributionHypothesis::Binomial).sup_residual < 1e-6);
        }
    }
    SUBCASE("oracle populations of the resonant ladder stay poissonian") {
        const MultilevelSystem system(
            [](int n) { return n > 0 ? std::sqrt(double(n)) : 0.0; },
            [](int) { return 0.0; }, std::nullopt);
        const AmplitudeTrajectory trajectory =
            integrate(system, std::vector<double>{0.0, 1.5});
        const PopulationDistribution pops = populations_of(trajectory);
        const DistributionFit fit =
            fit_distribution(pops.pops.back(), DistributionHypothesis::Poisson);
        CHECK(fit.sup_residual < 1e-6);
        CHECK(fit.parameter == doctest::Approx(2.25).epsilon(1e-6));
    }
    SUBCASE("degenerate input fits with parameter zero") {
        const std::vector<double> ground{1.0, 0.0, 0.0};
        for (auto hypothesis :
             {DistributionHypothesis::Poisson, DistributionHypothesis::Binomial}) {
            const DistributionFit fit = fit_distribution(ground, hypothesis);
            CHECK(fit.parameter == 0.0);
            CHECK(fit.sup_residual == 0.0);
        }
    }
}

TEST_CASE("period detection") {
    SUBCASE("finite resonant ladder") {
        const ObservableSeries series = summarize(kravchuk_series(20, 0.0, 30.0, 600));
        const auto period = detect_period(series);
        REQUIRE(period.has_value());
        const double expected = 2.0 * std::numbers::pi / std::sqrt(0.2);
        CHECK(std::abs(*period - expected) / expected < 1e-3);
    }
    SUBCASE("detuned infinite ladder has period 2*pi/eps") {
        PopulationDistribution pops;
        pops.times = time_grid(4.0 * std::numbers::pi, 400);
        for (double t : pops.times) {
            const auto amps = harmonic_detuned_amplitudes(t, 1.0, 40);
            std::vector<double> rho(amps.size());
            for (size_t n = 0; n < amps.size(); ++n) rho[n] = std::norm(amps[n]);
            pops.pops.push_back(std::move(rho));
        }
        const auto period = detect_period(summarize(pops));
        REQUIRE(period.has_value());
        CHECK(std::abs(*period - 2.0 * std::numbers::pi) / (2.0 * std::numbers::pi) < 1e-3);
    }
    SUBCASE("monotone growth has no period") {
        PopulationDistribution pops;
        pops.times = time_grid(4.0, 80);
        for (double t : pops.times) {
            const auto amps = harmonic_resonant_amplitudes(t, 60);
            std::vector<double> rho(amps.size());
            for (size_t n = 0; n < amps.size(); ++n) rho[n] = std::norm(amps[n]);
            pops.pops.push_back(std::move(rho));
        }
        CHECK_FALSE(detect_period(summarize(pops)).has_value());
    }
}
