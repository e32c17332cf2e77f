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
#include <span>
#include <string_view>
#include <vector>

#include "lightcone/cost.hpp"
#include "lightcone/graph.hpp"
#include "lightcone/kernels.hpp"

namespace lightcone {

/// 2^26 complex doubles is 1 GiB.
inline constexpr unsigned kDefaultQubitCap = 26;

struct SimOptions {
    unsigned qubit_cap = kDefaultQubitCap;
    Backend backend = Backend::openmp;
};

enum class InitialState { all_zero, plus_product };

std::string_view initial_state_name(InitialState state);
InitialState parse_initial_state(std::string_view name);

/// Angle schedule; layer k applies exp(-i gammas[k] C) then exp(-i betas[k] B).
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    static QaoaParams zeros(int depth);
    int depth() const {
        return static_cast<int>(gammas.size());
    }
    /// (gamma_1..gamma_p, beta_1..beta_p); the order used for tie-breaking.
    std::vector<double> flattened() const;
    static QaoaParams from_flattened(std::span<const double> values);
    void validate() const;

    friend bool operator==(const QaoaParams &, const QaoaParams &) = default;
};

/// Amplitudes over 2^m basis strings; vertex i is bit i of the index.
class Statevector {
   public:
    Statevector(unsigned num_qubits, std::vector<Amplitude> amplitudes);

    unsigned num_qubits() const {
        return num_qubits_;
    }
    std::size_t size() const {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    std::span<Amplitude> amplitudes() {
        return amplitudes_;
    }
    double norm(Backend backend = Backend::openmp) const;

   private:
    unsigned num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

Statevector prepare_initial(unsigned num_qubits, InitialState initial, const SimOptions &options = {});

/// Diagonal of the cost operator, stored as integer levels above the minimum
/// scaled cost so that phases and expectations become table lookups.
class CostTable {
   public:
    CostTable(const Graph &g, const CostModel &model, const SimOptions &options = {});

    unsigned num_qubits() const {
        return num_qubits_;
    }
    std::span<const std::int32_t> levels() const {
        return levels_;
    }
    std::int64_t min_scaled() const {
        return min_scaled_;
    }
    std::int64_t num_levels() const {
        return num_levels_;
    }
    std::int64_t scale() const {
        return scale_;
    }

    /// exp(-i gamma C) for each level.
    std::vector<Amplitude> phase_table(double gamma) const;
    /// C for each level.
    std::vector<double> value_table() const;

   private:
    unsigned num_qubits_;
    std::vector<std::int32_t> levels_;
    std::int64_t min_scaled_ = 0;
    std::int64_t num_levels_ = 0;
    std::int64_t scale_ = 1;
};

void apply_phase(Statevector &state, const Graph &g, const CostModel &model, double gamma,
                 const SimOptions &options = {});
void apply_phase(Statevector &state, const CostTable &table, double gamma, Backend backend = Backend::openmp);

void apply_mixer(Statevector &state, double beta, Backend backend = Backend::openmp);
/// Mixer restricted to a subset of qubits.
void apply_mixer(Statevector &state, std::span<const unsigned> qubits, double beta,
                 Backend backend = Backend::openmp);

Statevector run_qaoa(const Graph &g, const CostModel &model, const QaoaParams &params, InitialState initial,
                     const SimOptions &options = {});
Statevector run_qaoa(const CostTable &table, const QaoaParams &params, InitialState initial,
                     const SimOptions &options = {});

double expect_edge(const Statevector &state, Edge e, const CostModel &model, Backend backend = Backend::openmp);
double expect_total(const Statevector &state, const Graph &g, const CostModel &model,
                    Backend backend = Backend::openmp);
double expect_total(const Statevector &state, const CostTable &table, Backend backend = Backend::openmp);

/// Independent draws from |amplitude|^2.
std::vector<Bitstring> sample_bitstrings(const Statevector &state, std::size_t count, std::uint64_t seed);

}  // namespace lightcone
