// Copyright 2026 The lightcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "benchmark/benchmark.h"
#include "lightcone/graph.hpp"
#include "lightcone/kernels.hpp"

using namespace lightcone;

namespace {

struct Fixture {
    std::vector<Amplitude> amps;
    std::vector<std::int32_t> levels;
    std::vector<Amplitude> phases;
    std::vector<double> values;
    std::vector<Edge> edges;

    explicit Fixture(unsigned qubits) {
        const std::size_t size = std::size_t{1} << qubits;
        amps.assign(size, Amplitude(1.0 / std::sqrt(static_cast<double>(size)), 0.0));
        edges = generate_regular({qubits, 3, EnsembleKind::general, 1}).edges();
        levels.resize(size);
        kernels::serial::scaled_costs(levels, edges, CostModel::max_cut());
        const std::int32_t top = *std::max_element(levels.begin(), levels.end());
        for (std::int32_t c = 0; c <= top; ++c) {
            phases.push_back(std::polar(1.0, -0.3 * c));
            values.push_back(static_cast<double>(c));
        }
    }
};

Fixture &fixture(unsigned qubits) {
    static std::vector<std::unique_ptr<Fixture>> cache(32);
    if (!cache[qubits]) {
        cache[qubits] = std::make_unique<Fixture>(qubits);
    }
    return *cache[qubits];
}

template <bool Parallel>
void BM_apply_rx(benchmark::State &state) {
    Fixture &f = fixture(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        for (unsigned q = 0; q < state.range(0); ++q) {
            if constexpr (Parallel) {
                kernels::omp::apply_rx(f.amps, q, 0.1);
            } else {
                kernels::serial::apply_rx(f.amps, q, 0.1);
            }
        }
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.amps.size()) * state.range(0));
}

template <bool Parallel>
void BM_apply_phase_table(benchmark::State &state) {
    Fixture &f = fixture(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::omp::apply_phase_table(f.amps, f.levels, f.phases);
        } else {
            kernels::serial::apply_phase_table(f.amps, f.levels, f.phases);
        }
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.amps.size()));
}

template <bool Parallel>
void BM_scaled_costs(benchmark::State &state) {
    Fixture &f = fixture(static_cast<unsigned>(state.range(0)));
    std::vector<std::int32_t> out(f.amps.size());
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::omp::scaled_costs(out, f.edges, CostModel::max_cut());
        } else {
            kernels::serial::scaled_costs(out, f.edges, CostModel::max_cut());
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

template <bool Parallel>
void BM_norm_squared(benchmark::State &state) {
    Fixture &f = fixture(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        double v = Parallel ? kernels::omp::norm_squared(f.amps) : kernels::serial::norm_squared(f.amps);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.amps.size()));
}

template <bool Parallel>
void BM_diagonal_expectation(benchmark::State &state) {
    Fixture &f = fixture(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        double v = Parallel ? kernels::omp::diagonal_expectation(f.amps, f.levels, f.values)
                            : kernels::serial::diagonal_expectation(f.amps, f.levels, f.values);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.amps.size()));
}

template <bool Parallel>
void BM_pair_marginals(benchmark::State &state) {
    Fixture &f = fixture(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        auto v = Parallel ? kernels::omp::pair_marginals(f.amps, 0, 5) : kernels::serial::pair_marginals(f.amps, 0, 5);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.amps.size()));
}

}  // namespace

#define LIGHTCONE_BENCH(name)                                               \
    BENCHMARK_TEMPLATE(name, false)->Name(#name "/serial")->DenseRange(12, 22, 4); \
    BENCHMARK_TEMPLATE(name, true)->Name(#name "/omp")->DenseRange(12, 22, 4)

LIGHTCONE_BENCH(BM_apply_rx);
LIGHTCONE_BENCH(BM_apply_phase_table);
LIGHTCONE_BENCH(BM_scaled_costs);
LIGHTCONE_BENCH(BM_norm_squared);
LIGHTCONE_BENCH(BM_diagonal_expectation);
LIGHTCONE_BENCH(BM_pair_marginals);

BENCHMARK_MAIN();
