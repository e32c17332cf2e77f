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

#include <cstdint>
#include <random>
#include <span>

namespace lightcone {

// Every stochastic routine draws from this engine. The standard distributions
// are implementation-defined, so the helpers below are used instead to keep
// streams bit-identical across toolchains.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for the `stream`-th independent trial derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Uniform integer in [0, bound). `bound` must be positive.
std::uint64_t uniform_index(Rng &rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng &rng);

template <typename T>
void shuffle(std::span<T> items, Rng &rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = uniform_index(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace lightcone
