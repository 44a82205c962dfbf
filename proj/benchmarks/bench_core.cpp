#include "cohex/closed_form.hpp"
#include "cohex/oracle.hpp"
#include "cohex/polynomials.hpp"
#include "cohex/quadrature.hpp"
#include "cohex/scenario.hpp"
#include "cohex/spectral.hpp"

#include <benchmark/benchmark.h>

using namespace cohex;

static void BM_KravchukEvalSequence(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const PolynomialFamily family = PolynomialFamily::kravchuk(0.7, N);
    const double x = N / 2;
    for (auto _ : state) {
        auto values = family.eval_sequence(x, N);
        benchmark::DoNotOptimize(values.data());
    }
}
BENCHMARK(BM_KravchukEvalSequence)->Arg(20)->Arg(50)->Arg(200);

static void BM_HermiteEvalSequence(benchmark::State& state) {
    const PolynomialFamily family = PolynomialFamily::hermite();
    for (auto _ : state) {
        auto values = family.eval_sequence(1.7, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(values.data());
    }
}
BENCHMARK(BM_HermiteEvalSequence)->Arg(30)->Arg(100);

static void BM_KravchukAmplitudes(benchmark::State& state) {
    const KravchukParameters params =
        kravchuk_from_detuning(static_cast<int>(state.range(0)), 0.5);
    double t = 0.0;
    for (auto _ : state) {
        t += 0.05;
        auto amps = kravchuk_amplitudes(params, t);
        benchmark::DoNotOptimize(amps.data());
    }
}
BENCHMARK(BM_KravchukAmplitudes)->Arg(20)->Arg(200);

static void BM_SpectralDiscreteSum(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const KravchukParameters params = kravchuk_from_detuning(N, 0.5);
    const SpectralSolution solution =
        SpectralSolution::for_family(PolynomialFamily::kravchuk(params.p, N));
    double t = 0.0;
    for (auto _ : state) {
        t += 0.05;
        auto amps = amplitudes_at(solution, t, N);
        benchmark::DoNotOptimize(amps.data());
    }
}
BENCHMARK(BM_SpectralDiscreteSum)->Arg(20)->Arg(50);

static void BM_GaussHermiteRule(benchmark::State& state) {
    for (auto _ : state) {
        auto rule = gauss_hermite_rule(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(rule.nodes.data());
    }
}
BENCHMARK(BM_GaussHermiteRule)->Arg(32)->Arg(128);

static void BM_OracleFigurePreset(benchmark::State& state) {
    const KravchukParameters params = kravchuk_from_detuning(20, 0.0);
    const MultilevelSystem system = from_family(PolynomialFamily::kravchuk(params.p, 20));
    const std::vector<double> times = time_grid(30.0, 600);
    for (auto _ : state) {
        auto trajectory = integrate(system, times);
        benchmark::DoNotOptimize(trajectory.amps.data());
    }
}
BENCHMARK(BM_OracleFigurePreset);

static void BM_GramResidual(benchmark::State& state) {
    const PolynomialFamily family = PolynomialFamily::kravchuk(0.3, 50);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gram_residual(family, 50));
    }
}
BENCHMARK(BM_GramResidual);

BENCHMARK_MAIN();
