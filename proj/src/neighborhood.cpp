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

#include <vector>

#include "lightcone/error.hpp"
#include "lightcone/graph.hpp"

namespace lightcone {

namespace {

// Distances from the middle edge, reused across calls on one thread. Only
// touched entries are reset, so sweeping every edge of a large graph costs
// O(neighborhood) per edge.
class BallScratch {
   public:
    void reset(std::size_t n) {
        if (dist_.size() < n) {
            dist_.assign(n, -1);
        }
        for (Vertex v : order_) {
            dist_[v] = -1;
        }
        order_.clear();
    }

    void grow(const Graph &g, const Edge &middle, int radius) {
        reset(g.num_vertices());
        visit(middle.u, 0);
        visit(middle.v, 0);
        for (std::size_t head = 0; head < order_.size(); ++head) {
            Vertex w = order_[head];
            int next = dist_[w] + 1;
            if (next > radius) {
                break;
            }
            for (const Incidence &inc : g.incident(w)) {
                if (dist_[inc.to] < 0) {
                    visit(inc.to, next);
                }
            }
        }
    }

    int dist(Vertex v) const {
        return dist_[v];
    }
    const std::vector<Vertex> &order() const {
        return order_;
    }

   private:
    void visit(Vertex v, int d) {
        dist_[v] = d;
        order_.push_back(v);
    }

    std::vector<int> dist_;
    std::vector<Vertex> order_;
};

BallScratch &scratch() {
    thread_local BallScratch s;
    return s;
}

// An edge lies within `radius` edge steps of the middle edge iff one endpoint
// is within radius - 1 of it. Each such edge is reported once, from the
// endpoint ordered first by (distance, id).
template <typename Fn>
void for_each_ball_edge(const Graph &g, const BallScratch &ball, int radius, Fn &&fn) {
    for (Vertex w : ball.order()) {
        int dw = ball.dist(w);
        if (dw > radius - 1) {
            break;
        }
        for (const Incidence &inc : g.incident(w)) {
            int dx = ball.dist(inc.to);
            if (dx > dw || (dx == dw && inc.to > w)) {
                fn(w, inc.to);
            }
        }
    }
}

void check_edge(const Graph &g, std::size_t edge_index, int radius) {
    if (edge_index >= g.num_edges()) {
        fail_input("edge index " + std::to_string(edge_index) + " not in graph");
    }
    if (radius < 0) {
        fail_input("radius must be non-negative");
    }
}

}  // namespace

Neighborhood edge_neighborhood(const Graph &g, std::size_t edge_index, int radius) {
    check_edge(g, edge_index, radius);
    const Edge middle = g.edge(edge_index);
    BallScratch &ball = scratch();
    ball.grow(g, middle, radius);

    Neighborhood hood;
    hood.radius = radius;
    hood.vertex_map = ball.order();
    hood.distance.reserve(hood.vertex_map.size());
    std::vector<Vertex> local_of(g.num_vertices());
    for (std::size_t i = 0; i < hood.vertex_map.size(); ++i) {
        local_of[hood.vertex_map[i]] = static_cast<Vertex>(i);
        hood.distance.push_back(ball.dist(hood.vertex_map[i]));
    }
    std::vector<Edge> edges;
    if (radius == 0) {
        edges.push_back({0, 1});
    } else {
        for_each_ball_edge(g, ball, radius, [&](Vertex a, Vertex b) { edges.push_back({local_of[a], local_of[b]}); });
    }
    hood.subgraph = Graph(hood.vertex_map.size(), edges);
    hood.middle_edge = *hood.subgraph.find_edge(0, 1);
    hood.is_tree = hood.subgraph.is_connected() && hood.subgraph.num_edges() + 1 == hood.subgraph.num_vertices();
    return hood;
}

Neighborhood edge_neighborhood(const Graph &g, Edge e, int radius) {
    auto index = g.find_edge(e.u, e.v);
    if (!index) {
        fail_input("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") not in graph");
    }
    return edge_neighborhood(g, *index, radius);
}

bool has_tree_neighborhood(const Graph &g, std::size_t edge_index, int radius) {
    check_edge(g, edge_index, radius);
    if (radius == 0) {
        return true;
    }
    BallScratch &ball = scratch();
    ball.grow(g, g.edge(edge_index), radius);
    std::size_t edges = 0;
    for_each_ball_edge(g, ball, radius, [&](Vertex, Vertex) { ++edges; });
    // The ball is connected by construction.
    return edges + 1 == ball.order().size();
}

double tree_edge_fraction(const Graph &g, int radius) {
    if (g.num_edges() == 0) {
        return 1.0;
    }
    std::size_t trees = 0;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        trees += has_tree_neighborhood(g, e, radius) ? 1 : 0;
    }
    return static_cast<double>(trees) / static_cast<double>(g.num_edges());
}

}  // namespace lightcone
