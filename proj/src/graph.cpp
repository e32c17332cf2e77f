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
#include <vector>

#include "lightcone/error.hpp"
#include "lightcone/graph.hpp"

namespace lightcone {

Graph::Graph(std::size_t num_vertices, std::span<const Edge> edges) : adjacency_(num_vertices) {
    edges_.reserve(edges.size());
    for (const Edge &raw : edges) {
        if (raw.u >= num_vertices || raw.v >= num_vertices) {
            fail_input("edge (" + std::to_string(raw.u) + ", " + std::to_string(raw.v) + ") out of range for " +
                       std::to_string(num_vertices) + " vertices");
        }
        if (raw.u == raw.v) {
            fail_input("self-loop at vertex " + std::to_string(raw.u));
        }
        Edge e = Edge::normalized(raw.u, raw.v);
        for (const Incidence &inc : adjacency_[e.u]) {
            if (inc.to == e.v) {
                fail_input("duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
            }
        }
        std::size_t index = edges_.size();
        edges_.push_back(e);
        adjacency_[e.u].push_back({e.v, index});
        adjacency_[e.v].push_back({e.u, index});
    }
    for (auto &list : adjacency_) {
        std::sort(list.begin(), list.end(), [](const Incidence &a, const Incidence &b) { return a.to < b.to; });
    }
    if (num_vertices > 0) {
        std::size_t d = adjacency_[0].size();
        bool uniform = std::all_of(adjacency_.begin(), adjacency_.end(),
                                   [d](const std::vector<Incidence> &list) { return list.size() == d; });
        if (uniform) {
            degree_ = static_cast<int>(d);
        }
    }
}

std::optional<std::size_t> Graph::find_edge(Vertex a, Vertex b) const {
    if (a >= num_vertices() || b >= num_vertices()) {
        return std::nullopt;
    }
    const auto &list = adjacency_[a];
    auto it = std::lower_bound(list.begin(), list.end(), b,
                               [](const Incidence &inc, Vertex target) { return inc.to < target; });
    if (it != list.end() && it->to == b) {
        return it->edge;
    }
    return std::nullopt;
}

void Graph::set_bipartition(std::vector<std::uint8_t> sides) {
    if (sides.size() != num_vertices()) {
        fail_input("bipartition has " + std::to_string(sides.size()) + " labels for " +
                   std::to_string(num_vertices()) + " vertices");
    }
    for (std::uint8_t s : sides) {
        if (s > 1) {
            fail_input("bipartition labels must be 0 or 1");
        }
    }
    for (const Edge &e : edges_) {
        if (sides[e.u] == sides[e.v]) {
            fail_input("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") does not cross the bipartition");
        }
    }
    bipartition_ = std::move(sides);
}

bool Graph::is_connected() const {
    if (num_vertices() == 0) {
        return true;
    }
    std::vector<std::uint8_t> seen(num_vertices(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const Incidence &inc : adjacency_[v]) {
            if (!seen[inc.to]) {
                seen[inc.to] = 1;
                ++reached;
                stack.push_back(inc.to);
            }
        }
    }
    return reached == num_vertices();
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            edges.push_back({i, j});
        }
    }
    return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) {
        fail_input("cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        edges.push_back(Edge::normalized(i, static_cast<Vertex>((i + 1) % n)));
    }
    return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t left, std::size_t right) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < left; ++i) {
        for (Vertex j = 0; j < right; ++j) {
            edges.push_back({i, static_cast<Vertex>(left + j)});
        }
    }
    Graph g(left + right, edges);
    std::vector<std::uint8_t> sides(left + right, 0);
    std::fill(sides.begin() + static_cast<std::ptrdiff_t>(left), sides.end(), 1);
    g.set_bipartition(std::move(sides));
    return g;
}

std::size_t max_cut_of_bipartition(const Graph &g) {
    const auto &sides = g.bipartition();
    if (!sides) {
        fail_input("graph has no bipartition");
    }
    return static_cast<std::size_t>(std::count_if(g.edges().begin(), g.edges().end(),
                                                  [&](const Edge &e) { return (*sides)[e.u] != (*sides)[e.v]; }));
}

}  // namespace lightcone
