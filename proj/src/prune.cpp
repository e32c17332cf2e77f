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
#include <string>

#include "lightcone/error.hpp"
#include "lightcone/experiments.hpp"

namespace lightcone {

bool is_independent_set(const Graph &g, const Bitstring &bits) {
    if (bits.size() != g.num_vertices()) {
        fail_input("bitstring length does not match graph");
    }
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge &e) { return bits[e.u] != 0 && bits[e.v] != 0; });
}

PruneResult prune(const Graph &g, const Bitstring &bits, int d) {
    if (bits.size() != g.num_vertices()) {
        fail_input("bitstring length " + std::to_string(bits.size()) + " does not match " +
                   std::to_string(g.num_vertices()) + " vertices");
    }
    if (!g.is_regular(d)) {
        fail_input("pruning needs a " + std::to_string(d) + "-regular graph");
    }
    const CostModel model = CostModel::mis(d);
    PruneResult result;
    result.input = bits;
    result.input_cost = exact_cost_value(model, g, bits);

    // Clearing a vertex never creates a violation, so one pass over the
    // sorted edges visits violations in lexicographic order.
    std::vector<Edge> sorted = g.edges();
    std::sort(sorted.begin(), sorted.end());
    Bitstring current = bits;
    std::int64_t scaled = scaled_cost_value(model, g, current);
    for (const Edge &e : sorted) {
        if (current[e.u] != 0 && current[e.v] != 0) {
            current[e.v] = 0;
            // Hamming term drops by 1/2, the penalty by at least 1.
            std::int64_t delta = 0;
            for (const Incidence &inc : g.incident(e.v)) {
                delta -= model.scaled_edge_cost(true, current[inc.to] != 0);
                delta += model.scaled_edge_cost(false, current[inc.to] != 0);
            }
            scaled += delta;
            result.steps.push_back({e, e.v, Rational::reduced(scaled, model.scale())});
        }
    }
    result.output = std::move(current);
    result.output_cost = Rational::reduced(scaled, model.scale());
    result.output_set_size = static_cast<std::size_t>(std::count(result.output.begin(), result.output.end(), 1));
    return result;
}

}  // namespace lightcone
