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
#include "lightcone/rng.hpp"

namespace lightcone {

namespace {

constexpr int kMaxAttempts = 1'000'000;

std::string describe(const EnsembleSpec &spec) {
    return "n=" + std::to_string(spec.n) + " d=" + std::to_string(spec.d);
}

// Pairs consecutive stubs. Returns false on a self-loop or repeated edge.
bool edges_from_pairing(std::span<const Vertex> left, std::span<const Vertex> right, std::vector<Edge> &edges) {
    edges.clear();
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (left[i] == right[i]) {
            return false;
        }
        edges.push_back(Edge::normalized(left[i], right[i]));
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

void validate(const EnsembleSpec &spec) {
    if (spec.d < 1) {
        fail_input("degree must be at least 1 (" + describe(spec) + ")");
    }
    auto d = static_cast<std::size_t>(spec.d);
    if (spec.kind == EnsembleKind::general) {
        if (d >= spec.n) {
            fail_input("general ensemble needs d < n (" + describe(spec) + ")");
        }
        if ((spec.n * d) % 2 != 0) {
            fail_input("general ensemble needs n*d even (" + describe(spec) + ")");
        }
    } else {
        if (spec.n % 2 != 0) {
            fail_input("bipartite ensemble needs n even (" + describe(spec) + ")");
        }
        if (d > spec.n / 2) {
            fail_input("bipartite ensemble needs d <= n/2 (" + describe(spec) + ")");
        }
    }
}

Graph generate_regular(const EnsembleSpec &spec) {
    if (spec.kind != EnsembleKind::general) {
        fail_input("generate_regular expects the general ensemble");
    }
    validate(spec);
    Rng rng(spec.seed);
    std::vector<Vertex> stubs;
    stubs.reserve(spec.n * static_cast<std::size_t>(spec.d));
    for (Vertex v = 0; v < spec.n; ++v) {
        stubs.insert(stubs.end(), static_cast<std::size_t>(spec.d), v);
    }
    std::size_t half = stubs.size() / 2;
    std::vector<Vertex> left(half);
    std::vector<Vertex> right(half);
    std::vector<Edge> edges;
    edges.reserve(half);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        shuffle(std::span<Vertex>(stubs), rng);
        for (std::size_t i = 0; i < half; ++i) {
            left[i] = stubs[2 * i];
            right[i] = stubs[2 * i + 1];
        }
        if (edges_from_pairing(left, right, edges)) {
            return Graph(spec.n, edges);
        }
    }
    fail_resource("no simple pairing found in " + std::to_string(kMaxAttempts) + " attempts (" + describe(spec) + ")");
}

Graph generate_bipartite_regular(const EnsembleSpec &spec) {
    if (spec.kind != EnsembleKind::bipartite) {
        fail_input("generate_bipartite_regular expects the bipartite ensemble");
    }
    validate(spec);
    Rng rng(spec.seed);
    std::size_t side = spec.n / 2;
    std::vector<Vertex> left;
    std::vector<Vertex> right;
    for (Vertex v = 0; v < side; ++v) {
        left.insert(left.end(), static_cast<std::size_t>(spec.d), v);
        right.insert(right.end(), static_cast<std::size_t>(spec.d), static_cast<Vertex>(side + v));
    }
    std::vector<Edge> edges;
    edges.reserve(left.size());
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        shuffle(std::span<Vertex>(right), rng);
        if (edges_from_pairing(left, right, edges)) {
            Graph g(spec.n, edges);
            std::vector<std::uint8_t> sides(spec.n, 0);
            std::fill(sides.begin() + static_cast<std::ptrdiff_t>(side), sides.end(), 1);
            g.set_bipartition(std::move(sides));
            return g;
        }
    }
    fail_resource("no simple bipartite pairing found in " + std::to_string(kMaxAttempts) + " attempts (" +
                  describe(spec) + ")");
}

Graph generate(const EnsembleSpec &spec) {
    return spec.kind == EnsembleKind::general ? generate_regular(spec) : generate_bipartite_regular(spec);
}

}  // namespace lightcone
