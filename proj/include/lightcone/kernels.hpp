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

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>

#include "lightcone/cost.hpp"
#include "lightcone/graph.hpp"

namespace lightcone {

using Amplitude = std::complex<double>;

enum class Backend { serial, openmp };

// Amplitude-array kernels. `serial` is the reference implementation; `omp`
// splits the same loops across threads once the array holds at least
// 2^parallel_threshold amplitudes. Reductions in `omp` sum fixed-size blocks
// and fold the partials in block order, so results do not depend on the
// thread count.
namespace kernels {

inline constexpr unsigned kParallelThreshold = 14;

namespace serial {

/// out[b] = sum over edges of the scaled edge cost for basis string b.
void scaled_costs(std::span<std::int32_t> out, std::span<const Edge> edges, const CostModel &model);

/// amps[b] *= table[levels[b]].
void apply_phase_table(std::span<Amplitude> amps, std::span<const std::int32_t> levels,
                       std::span<const Amplitude> table);

/// exp(-i beta X) on one qubit.
void apply_rx(std::span<Amplitude> amps, unsigned qubit, double beta);

double norm_squared(std::span<const Amplitude> amps);

/// sum_b |amps[b]|^2 table[levels[b]].
double diagonal_expectation(std::span<const Amplitude> amps, std::span<const std::int32_t> levels,
                            std::span<const double> table);

/// Joint distribution of two qubits; entry bi + 2 bj.
std::array<double, 4> pair_marginals(std::span<const Amplitude> amps, unsigned qi, unsigned qj);

}  // namespace serial

namespace omp {

void scaled_costs(std::span<std::int32_t> out, std::span<const Edge> edges, const CostModel &model,
                  unsigned parallel_threshold = kParallelThreshold);
void apply_phase_table(std::span<Amplitude> amps, std::span<const std::int32_t> levels,
                       std::span<const Amplitude> table, unsigned parallel_threshold = kParallelThreshold);
void apply_rx(std::span<Amplitude> amps, unsigned qubit, double beta,
              unsigned parallel_threshold = kParallelThreshold);
double norm_squared(std::span<const Amplitude> amps, unsigned parallel_threshold = kParallelThreshold);
double diagonal_expectation(std::span<const Amplitude> amps, std::span<const std::int32_t> levels,
                            std::span<const double> table, unsigned parallel_threshold = kParallelThreshold);
std::array<double, 4> pair_marginals(std::span<const Amplitude> amps, unsigned qi, unsigned qj,
                                     unsigned parallel_threshold = kParallelThreshold);

}  // namespace omp

}  // namespace kernels
}  // namespace lightcone
