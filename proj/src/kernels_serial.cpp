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

#include "lightcone/kernels.hpp"

#include <cmath>

namespace lightcone::kernels::serial {

void scaled_costs(std::span<std::int32_t> out, std::span<const Edge> edges, const CostModel &model) {
    for (std::size_t b = 0; b < out.size(); ++b) {
        std::int64_t total = 0;
        for (const Edge &e : edges) {
            total += model.scaled_edge_cost((b >> e.u) & 1U, (b >> e.v) & 1U);
        }
        out[b] = static_cast<std::int32_t>(total);
    }
}

void apply_phase_table(std::span<Amplitude> amps, std::span<const std::int32_t> levels,
                       std::span<const Amplitude> table) {
    for (std::size_t b = 0; b < amps.size(); ++b) {
        amps[b] *= table[static_cast<std::size_t>(levels[b])];
    }
}

void apply_rx(std::span<Amplitude> amps, unsigned qubit, double beta) {
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; ++k) {
            const Amplitude a0 = amps[k];
            const Amplitude a1 = amps[k + stride];
            // [[c, -i s], [-i s, c]]
            amps[k] = {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
            amps[k + stride] = {s * a0.imag() + c * a1.real(), -s * a0.real() + c * a1.imag()};
        }
    }
}

double norm_squared(std::span<const Amplitude> amps) {
    double total = 0.0;
    for (const Amplitude &a : amps) {
        total += std::norm(a);
    }
    return total;
}

double diagonal_expectation(std::span<const Amplitude> amps, std::span<const std::int32_t> levels,
                            std::span<const double> table) {
    double total = 0.0;
    for (std::size_t b = 0; b < amps.size(); ++b) {
        total += std::norm(amps[b]) * table[static_cast<std::size_t>(levels[b])];
    }
    return total;
}

std::array<double, 4> pair_marginals(std::span<const Amplitude> amps, unsigned qi, unsigned qj) {
    std::array<double, 4> out{};
    for (std::size_t b = 0; b < amps.size(); ++b) {
        out[((b >> qi) & 1U) | (((b >> qj) & 1U) << 1)] += std::norm(amps[b]);
    }
    return out;
}

}  // namespace lightcone::kernels::serial
