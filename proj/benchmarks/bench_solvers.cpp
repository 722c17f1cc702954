// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "cavarray/dynamics.hpp"
#include "cavarray/observables.hpp"
#include "cavarray/spectrum.hpp"

#include <benchmark/benchmark.h>

using namespace cavarray;

namespace {

ModelParams middle_branch(int atoms, int n_max) {
    ModelParams p;
    p.atoms = atoms;
    p.phi = kPi;
    p.delta = 0.0;
    p.n_max = n_max;
    return p;
}

}  // namespace

// args: N, n_max
static void BM_SteadyState(benchmark::State& state) {
    const ModelParams p = middle_branch(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const SuperOperator l = build_liouvillian(p, space_for(p));
    for (auto _ : state) {
        SteadyState ss = steady_state(l);
        benchmark::DoNotOptimize(ss.report.residual);
    }
    state.counters["dim"] = static_cast<double>(l.space().dim());
}
BENCHMARK(BM_SteadyState)->Args({2, 8})->Args({4, 10})->Args({6, 12})->Args({8, 12})->Unit(benchmark::kMillisecond);

static void BM_BuildLiouvillian(benchmark::State& state) {
    const ModelParams p = middle_branch(static_cast<int>(state.range(0)), 12);
    const HilbertSpace s = space_for(p);
    for (auto _ : state) {
        SuperOperator l = build_liouvillian(p, s);
        benchmark::DoNotOptimize(l.matrix().nonZeros());
    }
}
BENCHMARK(BM_BuildLiouvillian)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

// propagate the ground state to t = 5/κ
static void BM_Propagate(benchmark::State& state) {
    const ModelParams p = middle_branch(static_cast<int>(state.range(0)), 8);
    const SuperOperator l = build_liouvillian(p, space_for(p));
    const DensityMatrix rho0 = DensityMatrix::ground(l.space());
    for (auto _ : state) {
        DensityMatrix rho = propagate(l, rho0, 5.0);
        benchmark::DoNotOptimize(rho.matrix().data());
    }
}
BENCHMARK(BM_Propagate)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_DelayedG2(benchmark::State& state) {
    const ModelParams p = middle_branch(2, 8);
    const SuperOperator l = build_liouvillian(p, space_for(p));
    const SteadyState ss = steady_state(l);
    const std::vector<double> grid = default_tau_grid();
    for (auto _ : state) {
        CorrelationTrace t = delayed_g2(ss.rho, l, 2, grid);
        benchmark::DoNotOptimize(t.g1.data());
    }
}
BENCHMARK(BM_DelayedG2)->Unit(benchmark::kMillisecond);

// args: N, sector
static void BM_DiagonalizeSector(benchmark::State& state) {
    ModelParams p = middle_branch(static_cast<int>(state.range(0)), 4);
    p.omega = 0.0;
    const HilbertSpace s = space_for(p);
    const QOperator h = build_hamiltonian(p, s);
    const QOperator ne = total_excitation(s);
    for (auto _ : state) {
        SectorSpectrum sp = diagonalize_sector(h, ne, static_cast<int>(state.range(1)));
        benchmark::DoNotOptimize(sp.energies.data());
    }
}
BENCHMARK(BM_DiagonalizeSector)->Args({4, 2})->Args({8, 2})->Args({8, 4});

BENCHMARK_MAIN();
