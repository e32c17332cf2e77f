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

#include <algorithm>
#include <cmath>
#include <string>

#include "lightcone/error.hpp"
#include "lightcone/rng.hpp"
#include "lightcone/statevector.hpp"

namespace lightcone {

namespace {

void check_cap(unsigned num_qubits, const SimOptions &options) {
    if (num_qubits > options.qubit_cap) {
        fail_resource("simulation needs " + std::to_string(num_qubits) + " qubits; cap is " +
                      std::to_string(options.qubit_cap));
    }
    if (num_qubits > 40) {
        fail_resource("statevector of " + std::to_string(num_qubits) + " qubits is not addressable");
    }
}

void check_dimension(const Statevector &state, const Graph &g) {
    if (state.num_qubits() != g.num_vertices()) {
        fail_input("state has " + std::to_string(state.num_qubits()) + " qubits but graph has " +
                   std::to_string(g.num_vertices()) + " vertices");
    }
}

}  // namespace

std::string_view initial_state_name(InitialState state) {
    return state == InitialState::all_zero ? "zero" : "plus";
}

InitialState parse_initial_state(std::string_view name) {
    if (name == "zero") {
        return InitialState::all_zero;
    }
    if (name == "plus") {
        return InitialState::plus_product;
    }
    fail_input("unknown initial state '" + std::string(name) + "' (expected zero or plus)");
}

QaoaParams QaoaParams::zeros(int depth) {
    if (depth < 0) {
        fail_input("depth must be non-negative");
    }
    return {std::vector<double>(static_cast<std::size_t>(depth), 0.0),
            std::vector<double>(static_cast<std::size_t>(depth), 0.0)};
}

std::vector<double> QaoaParams::flattened() const {
    std::vector<double> out = gammas;
    out.insert(out.end(), betas.begin(), betas.end());
    return out;
}

QaoaParams QaoaParams::from_flattened(std::span<const double> values) {
    if (values.size() % 2 != 0) {
        fail_input("flattened parameters must have even length");
    }
    std::size_t p = values.size() / 2;
    return {std::vector<double>(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(p)),
            std::vector<double>(values.begin() + static_cast<std::ptrdiff_t>(p), values.end())};
}

void QaoaParams::validate() const {
    if (gammas.size() != betas.size()) {
        fail_input("gamma and beta lists differ in length (" + std::to_string(gammas.size()) + " vs " +
                   std::to_string(betas.size()) + ")");
    }
    auto finite = [](double x) { return std::isfinite(x); };
    if (!std::all_of(gammas.begin(), gammas.end(), finite) || !std::all_of(betas.begin(), betas.end(), finite)) {
        fail_input("angles must be finite");
    }
}

Statevector::Statevector(unsigned num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits > 40 || amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        fail_input("amplitude count does not match 2^" + std::to_string(num_qubits));
    }
}

double Statevector::norm(Backend backend) const {
    double sq = backend == Backend::serial ? kernels::serial::norm_squared(amplitudes_)
                                           : kernels::omp::norm_squared(amplitudes_);
    return std::sqrt(sq);
}

Statevector prepare_initial(unsigned num_qubits, InitialState initial, const SimOptions &options) {
    check_cap(num_qubits, options);
    const std::size_t size = std::size_t{1} << num_qubits;
    if (initial == InitialState::all_zero) {
        std::vector<Amplitude> amps(size, Amplitude{0.0, 0.0});
        amps[0] = 1.0;
        return Statevector(num_qubits, std::move(amps));
    }
    const double a = std::pow(2.0, -0.5 * num_qubits);
    return Statevector(num_qubits, std::vector<Amplitude>(size, Amplitude{a, 0.0}));
}

CostTable::CostTable(const Graph &g, const CostModel &model, const SimOptions &options)
    : num_qubits_(static_cast<unsigned>(g.num_vertices())), scale_(model.scale()) {
    check_cap(num_qubits_, options);
    levels_.resize(std::size_t{1} << num_qubits_);
    if (options.backend == Backend::serial) {
        kernels::serial::scaled_costs(levels_, g.edges(), model);
    } else {
        kernels::omp::scaled_costs(levels_, g.edges(), model);
    }
    auto [lo, hi] = std::minmax_element(levels_.begin(), levels_.end());
    min_scaled_ = *lo;
    num_levels_ = static_cast<std::int64_t>(*hi) - *lo + 1;
    const auto shift = static_cast<std::int32_t>(min_scaled_);
    for (auto &level : levels_) {
        level -= shift;
    }
}

std::vector<Amplitude> CostTable::phase_table(double gamma) const {
    std::vector<Amplitude> table(static_cast<std::size_t>(num_levels_));
    for (std::int64_t k = 0; k < num_levels_; ++k) {
        double c = static_cast<double>(min_scaled_ + k) / static_cast<double>(scale_);
        table[static_cast<std::size_t>(k)] = std::polar(1.0, -gamma * c);
    }
    return table;
}

std::vector<double> CostTable::value_table() const {
    std::vector<double> table(static_cast<std::size_t>(num_levels_));
    for (std::int64_t k = 0; k < num_levels_; ++k) {
        table[static_cast<std::size_t>(k)] = static_cast<double>(min_scaled_ + k) / static_cast<double>(scale_);
    }
    return table;
}

void apply_phase(Statevector &state, const Graph &g, const CostModel &model, double gamma,
                 const SimOptions &options) {
    check_dimension(state, g);
    apply_phase(state, CostTable(g, model, options), gamma, options.backend);
}

void apply_phase(Statevector &state, const CostTable &table, double gamma, Backend backend) {
    if (state.num_qubits() != table.num_qubits()) {
        fail_input("state and cost table differ in qubit count");
    }
    const auto phases = table.phase_table(gamma);
    if (backend == Backend::serial) {
        kernels::serial::apply_phase_table(state.amplitudes(), table.levels(), phases);
    } else {
        kernels::omp::apply_phase_table(state.amplitudes(), table.levels(), phases);
    }
}

void apply_mixer(Statevector &state, double beta, Backend backend) {
    for (unsigned q = 0; q < state.num_qubits(); ++q) {
        if (backend == Backend::serial) {
            kernels::serial::apply_rx(state.amplitudes(), q, beta);
        } else {
            kernels::omp::apply_rx(state.amplitudes(), q, beta);
        }
    }
}

void apply_mixer(Statevector &state, std::span<const unsigned> qubits, double beta, Backend backend) {
    for (unsigned q : qubits) {
        if (q >= state.num_qubits()) {
            fail_input("mixer qubit " + std::to_string(q) + " out of range");
        }
        if (backend == Backend::serial) {
            kernels::serial::apply_rx(state.amplitudes(), q, beta);
        } else {
            kernels::omp::apply_rx(state.amplitudes(), q, beta);
        }
    }
}

Statevector run_qaoa(const Graph &g, const CostModel &model, const QaoaParams &params, InitialState initial,
                     const SimOptions &options) {
    check_cap(static_cast<unsigned>(g.num_vertices()), options);
    params.validate();
    if (params.depth() == 0) {
        return prepare_initial(static_cast<unsigned>(g.num_vertices()), initial, options);
    }
    return run_qaoa(CostTable(g, model, options), params, initial, options);
}

Statevector run_qaoa(const CostTable &table, const QaoaParams &params, InitialState initial,
                     const SimOptions &options) {
    params.validate();
    Statevector state = prepare_initial(table.num_qubits(), initial, options);
    for (int k = 0; k < params.depth(); ++k) {
        apply_phase(state, table, params.gammas[static_cast<std::size_t>(k)], options.backend);
        apply_mixer(state, params.betas[static_cast<std::size_t>(k)], options.backend);
    }
    return state;
}

double expect_edge(const Statevector &state, Edge e, const CostModel &model, Backend backend) {
    if (e.u >= state.num_qubits() || e.v >= state.num_qubits() || e.u == e.v) {
        fail_input("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") invalid for " +
                   std::to_string(state.num_qubits()) + " qubits");
    }
    auto marginals = backend == Backend::serial ? kernels::serial::pair_marginals(state.amplitudes(), e.u, e.v)
                                                : kernels::omp::pair_marginals(state.amplitudes(), e.u, e.v);
    double total = 0.0;
    for (unsigned k = 0; k < 4; ++k) {
        total += marginals[k] * model.edge_cost_value((k & 1U) != 0, (k & 2U) != 0);
    }
    return total;
}

double expect_total(const Statevector &state, const Graph &g, const CostModel &model, Backend backend) {
    check_dimension(state, g);
    SimOptions options;
    options.qubit_cap = std::max(options.qubit_cap, state.num_qubits());
    options.backend = backend;
    return expect_total(state, CostTable(g, model, options), backend);
}

double expect_total(const Statevector &state, const CostTable &table, Backend backend) {
    if (state.num_qubits() != table.num_qubits()) {
        fail_input("state and cost table differ in qubit count");
    }
    const auto values = table.value_table();
    return backend == Backend::serial ? kernels::serial::diagonal_expectation(state.amplitudes(), table.levels(), values)
                                      : kernels::omp::diagonal_expectation(state.amplitudes(), table.levels(), values);
}

std::vector<Bitstring> sample_bitstrings(const Statevector &state, std::size_t count, std::uint64_t seed) {
    std::vector<double> cumulative(state.size());
    double running = 0.0;
    for (std::size_t b = 0; b < state.size(); ++b) {
        running += std::norm(state.amplitudes()[b]);
        cumulative[b] = running;
    }
    Rng rng(seed);
    std::vector<Bitstring> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double target = uniform_unit(rng) * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
        auto index = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
            it - cumulative.begin(), static_cast<std::ptrdiff_t>(state.size()) - 1));
        out.push_back(bitstring_from_index(index, state.num_qubits()));
    }
    return out;
}

}  // namespace lightcone
