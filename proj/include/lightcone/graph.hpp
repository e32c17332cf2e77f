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
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lightcone {

using Vertex = std::uint32_t;

/// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge normalized(Vertex a, Vertex b) {
        return a < b ? Edge{a, b} : Edge{b, a};
    }

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

struct Incidence {
    Vertex to;
    std::size_t edge;
};

/// Simple undirected graph. Construction rejects self-loops, duplicate edges
/// and out-of-range endpoints. The uniform degree is recorded whenever every
/// vertex has the same degree.
class Graph {
   public:
    Graph() = default;
    Graph(std::size_t num_vertices, std::span<const Edge> edges);
    Graph(std::size_t num_vertices, std::initializer_list<Edge> edges)
        : Graph(num_vertices, std::span<const Edge>(edges.begin(), edges.size())) {
    }

    std::size_t num_vertices() const {
        return adjacency_.size();
    }
    std::size_t num_edges() const {
        return edges_.size();
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const Edge &edge(std::size_t index) const {
        return edges_.at(index);
    }
    std::span<const Incidence> incident(Vertex v) const {
        return adjacency_.at(v);
    }
    std::size_t degree_of(Vertex v) const {
        return adjacency_.at(v).size();
    }
    std::optional<int> degree() const {
        return degree_;
    }
    bool is_regular(int d) const {
        return degree_ && *degree_ == d;
    }

    std::optional<std::size_t> find_edge(Vertex a, Vertex b) const;

    /// Optional two-class labeling; every edge must cross it.
    const std::optional<std::vector<std::uint8_t>> &bipartition() const {
        return bipartition_;
    }
    void set_bipartition(std::vector<std::uint8_t> sides);

    bool is_connected() const;

   private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::optional<int> degree_;
    std::optional<std::vector<std::uint8_t>> bipartition_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t left, std::size_t right);

// ---------------------------------------------------------------------------
// Random regular ensembles.

enum class EnsembleKind { general, bipartite };

struct EnsembleSpec {
    std::size_t n = 0;
    int d = 0;
    EnsembleKind kind = EnsembleKind::general;
    std::uint64_t seed = 0;
};

/// Throws invalid_input if the spec cannot be realized.
void validate(const EnsembleSpec &spec);

/// Configuration model conditioned on simplicity by full resampling.
Graph generate_regular(const EnsembleSpec &spec);

/// Bipartite configuration model with classes {0..n/2-1} and {n/2..n-1}.
Graph generate_bipartite_regular(const EnsembleSpec &spec);

/// Dispatches on spec.kind.
Graph generate(const EnsembleSpec &spec);

// ---------------------------------------------------------------------------
// Edge neighborhoods.

struct Neighborhood {
    Graph subgraph;
    std::size_t middle_edge = 0;
    std::vector<Vertex> vertex_map;  // subgraph vertex -> host vertex
    std::vector<int> distance;       // subgraph vertex -> distance to the middle edge
    int radius = 0;
    bool is_tree = false;
};

/// Vertices within distance `radius` of either endpoint of `edge_index`, and
/// the edges reachable from the middle edge in at most `radius` edge steps.
/// Vertex 0 and 1 of the subgraph are the middle endpoints (u, v); the rest
/// follow in breadth-first order.
Neighborhood edge_neighborhood(const Graph &g, std::size_t edge_index, int radius);
Neighborhood edge_neighborhood(const Graph &g, Edge e, int radius);

/// Tree test only, without materializing the subgraph.
bool has_tree_neighborhood(const Graph &g, std::size_t edge_index, int radius);

double tree_edge_fraction(const Graph &g, int radius);

// ---------------------------------------------------------------------------
// Cycles.

struct CycleCensus {
    int max_length = 0;
    std::map<int, std::uint64_t> counts;  // length -> number of simple cycles
};

CycleCensus count_cycles(const Graph &g, int max_length);

/// Number of edges crossing the stored bipartition.
std::size_t max_cut_of_bipartition(const Graph &g);

// ---------------------------------------------------------------------------
// Edge-list text format:
//   n m        (blank lines and lines starting with # are skipped)
//   u v        (m lines, 0-indexed)
//   bipartition: <0/1 string of length n>   (optional)

Graph read_edge_list(std::istream &in);
Graph read_edge_list_file(const std::string &path);
void write_edge_list(std::ostream &out, const Graph &g);
void write_edge_list_file(const std::string &path, const Graph &g);

}  // namespace lightcone
