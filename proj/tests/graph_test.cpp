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
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "lightcone/error.hpp"
#include "lightcone/graph.hpp"

using namespace lightcone;

namespace {

void expect_graph_invariants(const Graph &g) {
    std::set<Edge> seen;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge &e = g.edge(i);
        ASSERT_LT(e.u, e.v);
        ASSERT_TRUE(seen.insert(e).second);
        ASSERT_EQ(g.find_edge(e.u, e.v), i);
        ASSERT_EQ(g.find_edge(e.v, e.u), i);
    }
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        degree_sum += g.degree_of(v);
        for (const Incidence &inc : g.incident(v)) {
            ASSERT_EQ(g.edge(inc.edge), Edge::normalized(v, inc.to));
        }
    }
    ASSERT_EQ(degree_sum, 2 * g.num_edges());
    if (auto d = g.degree()) {
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            ASSERT_EQ(g.degree_of(v), static_cast<std::size_t>(*d));
        }
    }
    if (const auto &sides = g.bipartition()) {
        for (const Edge &e : g.edges()) {
            ASSERT_NE((*sides)[e.u], (*sides)[e.v]);
        }
    }
}

// Both endpoints at distance <= p and connected with |E| = |V| - 1.
bool independent_tree_check(const Neighborhood &hood) {
    return hood.subgraph.is_connected() && hood.subgraph.num_edges() + 1 == hood.subgraph.num_vertices();
}

}  // namespace

TEST(graph, rejects_self_loops_and_duplicates) {
    EXPECT_THROW(Graph(3, {{0, 0}}), Error);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
    EXPECT_THROW(Graph(3, {{0, 3}}), Error);
    try {
        Graph(2, {{1, 1}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.category(), ErrorCategory::invalid_input);
    }
}

TEST(graph, records_uniform_degree) {
    EXPECT_EQ(complete_graph(4).degree(), 3);
    EXPECT_EQ(cycle_graph(6).degree(), 2);
    EXPECT_FALSE(path_graph(4).degree().has_value());
}

TEST(graph, bipartition_must_cross_every_edge) {
    Graph g = cycle_graph(4);
    EXPECT_NO_THROW(g.set_bipartition({0, 1, 0, 1}));
    Graph h = cycle_graph(4);
    EXPECT_THROW(h.set_bipartition({0, 0, 1, 1}), Error);
    EXPECT_THROW(h.set_bipartition({0, 1}), Error);
}

TEST(generate_regular, four_vertices_degree_three_is_k4) {
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        Graph g = generate_regular({4, 3, EnsembleKind::general, seed});
        EXPECT_EQ(g.num_edges(), 6U);
        for (Vertex a = 0; a < 4; ++a) {
            for (Vertex b = a + 1; b < 4; ++b) {
                EXPECT_TRUE(g.find_edge(a, b).has_value());
            }
        }
    }
}

TEST(generate_regular, rejects_impossible_specs) {
    EXPECT_THROW(generate_regular({3, 3, EnsembleKind::general, 0}), Error);
    EXPECT_THROW(generate_regular({5, 3, EnsembleKind::general, 0}), Error);
    EXPECT_THROW(generate_regular({6, 0, EnsembleKind::general, 0}), Error);
    EXPECT_THROW(generate_regular({6, 3, EnsembleKind::bipartite, 0}), Error);
}

TEST(generate_regular, large_graph_is_simple_and_regular) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = generate_regular({1000, 3, EnsembleKind::general, seed});
        EXPECT_EQ(g.num_edges(), 1500U);
        EXPECT_EQ(g.degree(), 3);
        expect_graph_invariants(g);
    }
}

TEST(generate_regular, deterministic_in_seed) {
    Graph a = generate_regular({200, 3, EnsembleKind::general, 42});
    Graph b = generate_regular({200, 3, EnsembleKind::general, 42});
    Graph c = generate_regular({200, 3, EnsembleKind::general, 43});
    EXPECT_EQ(a.edges(), b.edges());
    EXPECT_NE(a.edges(), c.edges());
}

TEST(generate_bipartite_regular, six_vertices_degree_three_is_k33) {
    Graph g = generate_bipartite_regular({6, 3, EnsembleKind::bipartite, 7});
    EXPECT_EQ(g.num_edges(), 9U);
    for (Vertex a = 0; a < 3; ++a) {
        for (Vertex b = 3; b < 6; ++b) {
            EXPECT_TRUE(g.find_edge(a, b).has_value());
        }
    }
    ASSERT_TRUE(g.bipartition().has_value());
}

TEST(generate_bipartite_regular, two_vertices_degree_one_is_an_edge) {
    Graph g = generate_bipartite_regular({2, 1, EnsembleKind::bipartite, 0});
    ASSERT_EQ(g.num_edges(), 1U);
    EXPECT_EQ(g.edge(0), (Edge{0, 1}));
}

TEST(generate_bipartite_regular, invariants_across_seeds) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = generate_bipartite_regular({200, 3, EnsembleKind::bipartite, seed});
        EXPECT_EQ(g.degree(), 3);
        expect_graph_invariants(g);
        EXPECT_EQ(max_cut_of_bipartition(g), 300U);
    }
}

TEST(generate_bipartite_regular, rejects_odd_n) {
    EXPECT_THROW(generate_bipartite_regular({7, 3, EnsembleKind::bipartite, 0}), Error);
    EXPECT_THROW(generate_bipartite_regular({6, 4, EnsembleKind::bipartite, 0}), Error);
}

TEST(max_cut_of_bipartition, examples) {
    EXPECT_EQ(max_cut_of_bipartition(complete_bipartite_graph(3, 3)), 9U);
    Graph edge = complete_bipartite_graph(1, 1);
    EXPECT_EQ(max_cut_of_bipartition(edge), 1U);
    EXPECT_EQ(max_cut_of_bipartition(generate_bipartite_regular({100, 3, EnsembleKind::bipartite, 5})), 150U);
    EXPECT_THROW(max_cut_of_bipartition(complete_graph(4)), Error);
}

TEST(edge_neighborhood, k4_radius_zero_is_the_edge) {
    Neighborhood hood = edge_neighborhood(complete_graph(4), 0, 0);
    EXPECT_EQ(hood.subgraph.num_vertices(), 2U);
    EXPECT_EQ(hood.subgraph.num_edges(), 1U);
    EXPECT_TRUE(hood.is_tree);
}

TEST(edge_neighborhood, k4_radius_one_is_not_a_tree) {
    Graph k4 = complete_graph(4);
    for (std::size_t e = 0; e < k4.num_edges(); ++e) {
        Neighborhood hood = edge_neighborhood(k4, e, 1);
        EXPECT_EQ(hood.subgraph.num_vertices(), 4U);
        // The edge between the two far vertices is two steps from the middle.
        EXPECT_EQ(hood.subgraph.num_edges(), 5U);
        EXPECT_FALSE(hood.is_tree);
    }
}

TEST(edge_neighborhood, c6_radius_one_is_a_path_on_four_vertices) {
    Graph c6 = cycle_graph(6);
    for (std::size_t e = 0; e < c6.num_edges(); ++e) {
        Neighborhood hood = edge_neighborhood(c6, e, 1);
        EXPECT_EQ(hood.subgraph.num_vertices(), 4U);
        EXPECT_EQ(hood.subgraph.num_edges(), 3U);
        EXPECT_TRUE(hood.is_tree);
        EXPECT_EQ(hood.subgraph.edge(hood.middle_edge), (Edge{0, 1}));
        EXPECT_EQ(hood.vertex_map[0], c6.edge(e).u);
        EXPECT_EQ(hood.vertex_map[1], c6.edge(e).v);
    }
}

TEST(edge_neighborhood, rejects_missing_edge) {
    EXPECT_THROW(edge_neighborhood(cycle_graph(6), Edge{0, 3}, 1), Error);
    EXPECT_THROW(edge_neighborhood(cycle_graph(6), 17, 1), Error);
}

TEST(edge_neighborhood, radius_monotone_and_tree_flag_consistent) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = generate_regular({60, 3, EnsembleKind::general, seed});
        for (std::size_t e = 0; e < g.num_edges(); e += 7) {
            for (int p = 0; p < 4; ++p) {
                Neighborhood inner = edge_neighborhood(g, e, p);
                Neighborhood outer = edge_neighborhood(g, e, p + 1);
                std::set<Vertex> outer_set(outer.vertex_map.begin(), outer.vertex_map.end());
                for (Vertex v : inner.vertex_map) {
                    EXPECT_TRUE(outer_set.count(v));
                }
                EXPECT_EQ(inner.is_tree, independent_tree_check(inner));
                EXPECT_EQ(inner.is_tree, has_tree_neighborhood(g, e, p));
                for (std::size_t i = 0; i < inner.distance.size(); ++i) {
                    EXPECT_LE(inner.distance[i], p);
                }
            }
        }
    }
}

TEST(edge_neighborhood, tree_neighborhood_matches_canonical_size) {
    Graph g = generate_regular({2000, 3, EnsembleKind::general, 3});
    std::size_t trees = 0;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        Neighborhood hood = edge_neighborhood(g, e, 2);
        if (hood.is_tree) {
            ++trees;
            EXPECT_EQ(hood.subgraph.num_vertices(), 14U);
        }
    }
    EXPECT_GT(trees, g.num_edges() * 9 / 10);
}

TEST(tree_edge_fraction, trees_are_all_tree_edges) {
    EXPECT_DOUBLE_EQ(tree_edge_fraction(path_graph(10), 3), 1.0);
    std::vector<Edge> star = {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}};
    EXPECT_DOUBLE_EQ(tree_edge_fraction(Graph(6, star), 5), 1.0);
}

TEST(tree_edge_fraction, k4_radius_one_is_zero) {
    EXPECT_DOUBLE_EQ(tree_edge_fraction(complete_graph(4), 1), 0.0);
}

TEST(tree_edge_fraction, large_cubic_graphs_mostly_tree_like) {
    int good = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        double f = tree_edge_fraction(generate_regular({5000, 3, EnsembleKind::general, seed}), 2);
        good += f >= 0.99 ? 1 : 0;
    }
    EXPECT_EQ(good, 50);
}

TEST(edge_list, round_trip_with_bipartition) {
    Graph g = generate_bipartite_regular({10, 3, EnsembleKind::bipartite, 4});
    std::stringstream text;
    write_edge_list(text, g);
    Graph back = read_edge_list(text);
    EXPECT_EQ(back.edges(), g.edges());
    EXPECT_EQ(back.bipartition(), g.bipartition());
}

TEST(edge_list, skips_comments_and_blank_lines) {
    std::istringstream text("# triangle\n3 3\n\n0 1\n  # middle\n1 2\n0 2\n");
    Graph g = read_edge_list(text);
    EXPECT_EQ(g.num_edges(), 3U);
    EXPECT_TRUE(g.is_regular(2));
}

TEST(edge_list, rejects_bad_input) {
    std::istringstream dup("3 2\n0 1\n1 0\n");
    EXPECT_THROW(read_edge_list(dup), Error);
    std::istringstream loop("3 1\n2 2\n");
    EXPECT_THROW(read_edge_list(loop), Error);
    std::istringstream short_list("3 2\n0 1\n");
    EXPECT_THROW(read_edge_list(short_list), Error);
    std::istringstream bad_sides("2 1\n0 1\nbipartition: 00\n");
    EXPECT_THROW(read_edge_list(bad_sides), Error);
    EXPECT_THROW(read_edge_list_file("/nonexistent/graph.txt"), Error);
}
