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

#include <cmath>
#include <cstdint>
#include <vector>

#include "lightcone/kernels.hpp"

namespace lightcone::kernels::omp {

namespace {

constexpr std::size_t kBlock = 4096;

bool wide(std::size_t size, unsigned threshold) {
    return size >= (std::size_t{1} << threshold);
}

std::size_t block_count(std::size_t size) {
    return (size + kBlock - 1) / kBlock;
}

double fold(const std::vector<double> &partials) {
    double total = 0.0;
    for (double p : partials) {
        total += p;
    }
    return total;
}

}  // namespace

void scaled_costs(std::span<std::int32_t> out, std::span<const Edge> edges, const CostModel &model,
                  unsigned parallel_threshold) {
    const auto size = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static) if (wide(out.size(), parallel_threshold))
    for (std::int64_t b = 0; b < size; ++b) {
        std::int64_t total = 0;
        for (const Edge &e : edges) {
            total += model.scaled_edge_cost((b >> e.u) & 1, (b >> e.v) & 1);
        }
        out[static_cast<std::size_t>(b)] = static_cast<std::int32_t>(total);
    }
}

void apply_phase_table(std::span<Amplitude> amps, std::span<const std::int32_t> levels,
                       std::span<const Amplitude> table, unsigned parallel_threshold) {
    const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (wide(amps.size(), parallel_threshold))
    for (std::int64_t b = 0; b < size; ++b) {
        amps[static_cast<std::size_t>(b)] *= table[static_cast<std::size_t>(levels[static_cast<std::size_t>(b)])];
    }
}

void apply_rx(std::span<Amplitude> amps, unsigned qubit, double beta, unsigned parallel_threshold) {
    if (!wide(amps.size(), parallel_threshold)) {
        serial::apply_rx(amps, qubit, beta);
        return;
    }
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    const std::size_t stride = std::size_t{1} << qubit;
    const auto groups = static_cast<std::int64_t>(amps.size() / (2 * stride));
    auto rotate = [&](std::size_t k) {
        const Amplitude a0 = amps[k];
        const Amplitude a1 = amps[k + stride];
        amps[k] = {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
        amps[k + stride] = {s * a0.imag() + c * a1.real(), -s * a0.real() + c * a1.imag()};
    };
    // Low qubits have many short groups, high qubits few long ones.
    if (stride < kBlock) {
#pragma omp parallel for schedule(static)
        for (std::int64_t g = 0; g < groups; ++g) {
            const std::size_t base = static_cast<std::size_t>(g) * 2 * stride;
            for (std::size_t k = base; k < base + stride; ++k) {
                rotate(k);
            }
        }
    } else {
        for (std::int64_t g = 0; g < groups; ++g) {
            const std::size_t base = static_cast<std::size_t>(g) * 2 * stride;
            const auto len = static_cast<std::int64_t>(stride);
#pragma omp parallel for schedule(static)
            for (std::int64_t i = 0; i < len; ++i) {
                rotate(base + static_cast<std::size_t>(i));
            }
        }
    }
}

double norm_squared(std::span<const Amplitude> amps, unsigned parallel_threshold) {
    const std::size_t blocks = block_count(amps.size());
    std::vector<double> partials(blocks, 0.0);
#pragma omp parallel for schedule(static) if (wide(amps.size(), parallel_threshold))
    for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks); ++blk) {
        const std::size_t lo = static_cast<std::size_t>(blk) * kBlock;
        const std::size_t hi = std::min(lo + kBlock, amps.size());
        double sum = 0.0;
        for (std::size_t b = lo; b < hi; ++b) {
            sum += std::norm(amps[b]);
        }
        partials[static_cast<std::size_t>(blk)] = sum;
    }
    return fold(partials);
}

double diagonal_expectation(std::span<const Amplitude> amps, std::span<const std::int32_t> levels,
                            std::span<const double> table, unsigned parallel_threshold) {
    const std::size_t blocks = block_count(amps.size());
    std::vector<double> partials(blocks, 0.0);
#pragma omp parallel for schedule(static) if (wide(amps.size(), parallel_threshold))
    for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks); ++blk) {
        const std::size_t lo = static_cast<std::size_t>(blk) * kBlock;
        const std::size_t hi = std::min(lo + kBlock, amps.size());
        double sum = 0.0;
        for (std::size_t b = lo; b < hi; ++b) {
            sum += std::norm(amps[b]) * table[static_cast<std::size_t>(levels[b])];
        }
        partials[static_cast<std::size_t>(blk)] = sum;
    }
    return fold(partials);
}

std::array<double, 4> pair_marginals(std::span<const Amplitude> amps, unsigned qi, unsigned qj,
                                     unsigned parallel_threshold) {
    const std::size_t blocks = block_count(amps.size());
    std::vector<std::array<double, 4>> partials(blocks);
#pragma omp parallel for schedule(static) if (wide(amps.size(), parallel_threshold))
    for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks); ++blk) {
        const std::size_t lo = static_cast<std::size_t>(blk) * kBlock;
        const std::size_t hi = std::min(lo + kBlock, amps.size());
        std::array<double, 4> sum{};
        for (std::size_t b = lo; b < hi; ++b) {
            sum[((b >> qi) & 1U) | (((b >> qj) & 1U) << 1)] += std::norm(amps[b]);
        }
        partials[static_cast<std::size_t>(blk)] = sum;
    }
    std::array<double, 4> out{};
    for (const auto &p : partials) {
        for (std::size_t k = 0; k < 4; ++k) {
            out[k] += p[k];
        }
    }
    return out;
}

}  // namespace lightcone::kernels::omp
