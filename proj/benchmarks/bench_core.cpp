#include "nvodmr/eigensystem.hpp"
#include "nvodmr/ensemble.hpp"
#include "nvodmr/hamiltonian.hpp"
#include "nvodmr/spin_register.hpp"
#include "nvodmr/transitions.hpp"

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

namespace {

using namespace nvodmr;

std::vector<HyperfineCoupling> tilted_sites(int n) {
    std::vector<HyperfineCoupling> sites;
    for (int k = 0; k < n; ++k) {
        sites.emplace_back("s" + std::to_string(k), Eigen::Vector3d(3.0 + k, 0.0, 130.0 / (k + 1)));
    }
    return sites;
}

const ZfsParams kZfs(2870.0, 1.5);
const Eigen::Vector3d kField(4.0, -2.0, 30.0);

void BM_BuildHamiltonian(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto sites = tilted_sites(n);
    const auto reg = build_register(n, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_hamiltonian(kZfs, kField, sites, all_occupied(n), reg));
    }
    state.counters["dim"] = static_cast<double>(reg.dim());
}
BENCHMARK(BM_BuildHamiltonian)->Arg(3)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_EigendecomposeAndLines(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto sites = tilted_sites(n);
    const auto reg = build_register(n, 12);
    const Eigen::MatrixXcd h = build_hamiltonian(kZfs, kField, sites, all_occupied(n), reg);
    for (auto _ : state) {
        const Eigensystem eig = eigendecompose(h);
        benchmark::DoNotOptimize(extract_transitions(eig, reg));
    }
}
BENCHMARK(BM_EigendecomposeAndLines)->Arg(3)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Factorized(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<HyperfineCoupling> sites;
    for (int k = 0; k < n; ++k) sites.push_back(HyperfineCoupling::axial("s" + std::to_string(k), 130.0 / (k + 1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(factorized_transitions(kZfs, kField, sites, all_occupied(n)));
    }
}
BENCHMARK(BM_Factorized)->Arg(3)->Arg(11)->Unit(benchmark::kMicrosecond);

void BM_SimulateFirstShell(benchmark::State& state) {
    SimulationConfig c;
    c.enrichment = 0.999;
    c.explicit_sites = {HyperfineCoupling::axial("shell1", 130), HyperfineCoupling::axial("shell1", 130),
                        HyperfineCoupling::axial("shell1", 130)};
    c.n_samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(simulate_spectrum(c));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateFirstShell)->Arg(2048)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
