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

#include <string>
#include <vector>

#include "lightcone/error.hpp"
#include "lightcone/tree.hpp"

namespace lightcone {

namespace {

void check_shape(int d, int p) {
    if (d < 2) {
        fail_input("canonical tree needs d >= 2");
    }
    if (p < 0) {
        fail_input("radius must be non-negative");
    }
}

void check_depth(const QaoaParams &params, int p) {
    params.validate();
    if (params.depth() != p) {
        fail_input("parameter depth " + std::to_string(params.depth()) + " does not match tree radius " +
                   std::to_string(p));
    }
}

}  // namespace

std::size_t canonical_tree_size(int d, int p) {
    check_shape(d, p);
    std::size_t level = 1;
    std::size_t total = 0;
    for (int k = 0; k <= p; ++k) {
        total += level;
        if (total > (std::size_t{1} << 40)) {
            return std::size_t{1} << 41;  // far beyond any cap
        }
        level *= static_cast<std::size_t>(d - 1);
    }
    return 2 * total;
}

CanonicalTree build_canonical_tree(int d, int p, unsigned qubit_cap) {
    std::size_t size = canonical_tree_size(d, p);
    if (size > qubit_cap) {
        fail_resource("canonical tree for d=" + std::to_string(d) + " p=" + std::to_string(p) + " needs " +
                      std::to_string(size) + " qubits; cap is " + std::to_string(qubit_cap));
    }
    CanonicalTree tree;
    tree.degree = d;
    tree.radius = p;
    tree.depth_of = {0, 0};
    std::vector<Edge> edges{{0, 1}};
    for (std::size_t head = 0; head < tree.depth_of.size(); ++head) {
        int depth = tree.depth_of[head];
        if (depth >= p) {
            continue;
        }
        for (int c = 0; c < d - 1; ++c) {
            auto child = static_cast<Vertex>(tree.depth_of.size());
            tree.depth_of.push_back(depth + 1);
            edges.push_back({static_cast<Vertex>(head), child});
        }
    }
    tree.graph = Graph(tree.depth_of.size(), edges);
    tree.middle_edge = 0;
    return tree;
}

TreeExpectation tree_expectation(int d, int p, const CostModel &model, const QaoaParams &params,
                                 InitialState initial, const SimOptions &options) {
    check_depth(params, p);
    CanonicalTree tree = build_canonical_tree(d, p, options.qubit_cap);
    Statevector state = run_qaoa(tree.graph, model, params, initial, options);
    TreeExpectation out;
    out.model = model;
    out.degree = d;
    out.radius = p;
    out.params = params;
    out.initial = initial;
    out.value = expect_edge(state, tree.graph.edge(tree.middle_edge), model, options.backend);
    return out;
}

TreeObjective::TreeObjective(int d, int p, const CostModel &model, InitialState initial, const SimOptions &options)
    : tree_(build_canonical_tree(d, p, options.qubit_cap)),
      model_(model),
      initial_(initial),
      options_(options),
      table_(tree_.graph, model, options) {
    mixer_qubits_.resize(static_cast<std::size_t>(p));
    for (int layer = 0; layer < p; ++layer) {
        for (std::size_t v = 0; v < tree_.depth_of.size(); ++v) {
            if (tree_.depth_of[v] <= p - 1 - layer) {
                mixer_qubits_[static_cast<std::size_t>(layer)].push_back(static_cast<unsigned>(v));
            }
        }
    }
}

double TreeObjective::operator()(const QaoaParams &params) const {
    check_depth(params, tree_.radius);
    Statevector state = prepare_initial(table_.num_qubits(), initial_, options_);
    for (std::size_t k = 0; k < mixer_qubits_.size(); ++k) {
        apply_phase(state, table_, params.gammas[k], options_.backend);
        apply_mixer(state, mixer_qubits_[k], params.betas[k], options_.backend);
    }
    return expect_edge(state, tree_.graph.edge(tree_.middle_edge), model_, options_.backend);
}

EnsemblePrediction predicted_ensemble_cost(std::size_t n, int d, double tree_value) {
    return {static_cast<double>(n) * static_cast<double>(d) / 2.0 * tree_value, true};
}

}  // namespace lightcone
