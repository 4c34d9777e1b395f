#include <benchmark/benchmark.h>

#include "eitspec/dressed.hpp"
#include "eitspec/lineshape.hpp"
#include "eitspec/scenarios.hpp"

namespace {

using namespace eitspec;

const SpectralLine kLine{Wavenumber{100.0}, Wavenumber{1.0}, 1.0, "bench", "x"};

void BM_InvertHamiltonian(benchmark::State& state) {
    const auto ds = dressed_coefficients(Wavenumber{0.7}, Wavenumber{2.0});
    double e = 95.0;
    for (auto _ : state) {
        auto h = effective_hamiltonian(Wavenumber{e}, kLine, ds);
        benchmark::DoNotOptimize(invert_2x2(h));
        e += 1e-6;
    }
}
BENCHMARK(BM_InvertHamiltonian);

// Grid of range(0) points: closed form at zero detuning, general path otherwise.
void BM_LineProfile(benchmark::State& state, double detuning) {
    const auto grid = make_grid(kLine.omega_ge, Wavenumber{10.0}, Wavenumber{20.0 / static_cast<double>(state.range(0))});
    const ControlField control{Wavenumber{300.0 + detuning}, Wavenumber{2.5}, Wavenumber{300.0}};
    for (auto _ : state) benchmark::DoNotOptimize(line_profile(kLine, control, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}
BENCHMARK_CAPTURE(BM_LineProfile, resonant, 0.0)->Arg(1000)->Arg(100000);
BENCHMARK_CAPTURE(BM_LineProfile, detuned, 1.5)->Arg(1000)->Arg(100000);

void BM_Scenario(benchmark::State& state, const char* name) {
    const auto cfg = bundled_scenario(name);
    for (auto _ : state) benchmark::DoNotOptimize(run_scenario(cfg));
}
BENCHMARK_CAPTURE(BM_Scenario, fig5, "fig5-congested")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scenario, cl2_inter, "cl2-inter")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
