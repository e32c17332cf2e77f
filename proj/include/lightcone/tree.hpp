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

#include <cstddef>
#include <vector>

#include "lightcone/graph.hpp"
#include "lightcone/statevector.hpp"

namespace lightcone {

/// Two complete (d-1)-ary trees of depth p whose roots are joined by the
/// middle edge. Endpoint A is vertex 0, endpoint B is vertex 1; the remaining
/// vertices are numbered level by level, A's side before B's side.
struct CanonicalTree {
    int degree = 0;
    int radius = 0;
    Graph graph;
    std::size_t middle_edge = 0;
    std::vector<int> depth_of;
};

/// 2 * sum_{k=0..p} (d-1)^k.
std::size_t canonical_tree_size(int d, int p);

CanonicalTree build_canonical_tree(int d, int p, unsigned qubit_cap = kDefaultQubitCap);

struct TreeExpectation {
    CostModel model = CostModel::max_cut();
    int degree = 0;
    int radius = 0;
    QaoaParams params;
    InitialState initial = InitialState::plus_product;
    double value = 0.0;
};

/// Middle-edge expectation after the depth-p circuit on the canonical tree.
/// `params.depth()` must equal p.
TreeExpectation tree_expectation(int d, int p, const CostModel &model, const QaoaParams &params,
                                 InitialState initial, const SimOptions &options = {});

/// Same value as tree_expectation, for repeated evaluation. The cost table is
/// built once, and in layer k the mixer only touches qubits within distance
/// p - k of the middle edge; rotations outside that cone commute with the
/// measured edge term and cancel. Calls are safe from concurrent threads.
class TreeObjective {
   public:
    TreeObjective(int d, int p, const CostModel &model, InitialState initial, const SimOptions &options = {});

    double operator()(const QaoaParams &params) const;

    int degree() const {
        return tree_.degree;
    }
    int radius() const {
        return tree_.radius;
    }
    const CostModel &model() const {
        return model_;
    }
    InitialState initial() const {
        return initial_;
    }
    const CanonicalTree &tree() const {
        return tree_;
    }

   private:
    CanonicalTree tree_;
    CostModel model_;
    InitialState initial_;
    SimOptions options_;
    CostTable table_;
    std::vector<std::vector<unsigned>> mixer_qubits_;  // per layer
};

/// Leading term (n d / 2) * C_tree of the ensemble expectation. The
/// sub-leading finite-size correction has no known constant and is only
/// flagged.
struct EnsemblePrediction {
    double leading_term = 0.0;
    bool finite_size_correction_unquantified = true;
};

EnsemblePrediction predicted_ensemble_cost(std::size_t n, int d, double tree_value);

}  // namespace lightcone
