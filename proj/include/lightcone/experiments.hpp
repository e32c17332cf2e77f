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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lightcone/graph.hpp"
#include "lightcone/optimizer.hpp"
#include "lightcone/statevector.hpp"
#include "lightcone/tree.hpp"

namespace lightcone {

inline constexpr int kReportSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Literature constants for random d-regular graphs. Optimal cut rho_d n and
// maximum independent set sigma_d n, w.h.p.

struct LiteratureConstants {
    static constexpr double rho3_upper = 1.4026;
    static constexpr double sigma3_upper = 0.454;
    static constexpr std::string_view rho3_provenance = "Max-Cut on random cubic graphs: rho_3 < 1.4026";
    static constexpr std::string_view sigma3_provenance =
        "independent sets in random cubic graphs: sigma_3 < 0.454";
    static constexpr std::string_view sigma_large_d_provenance =
        "large-d independence number: sigma_d <= 2 ln(d) / d";
    static constexpr std::string_view rho_large_d_form = "rho_d <= d/4 + O(sqrt(d)); constant unspecified";

    static double sigma_large_d(int d);
};

struct RatioReport {
    Problem problem = Problem::max_cut;
    int degree = 0;
    int depth = 0;
    double tree_value = 0.0;
    double ceiling = 0.0;
    double achieved_ratio = 0.0;
    bool within_ceiling = false;
    bool asymptotic_constant = false;  // large-d formula rather than a d-specific bound
    bool finite_size_flag = true;
    std::string provenance;
    std::string large_d_statement;
};

/// Bipartite d-regular graphs have a cut of nd/2 and an independent set of
/// n/2, so the tree value turns into a ratio of C_tree (Max-Cut) or
/// d * C_tree (MIS). Ceilings are 2 rho_d / d and 2 sigma_d. Throws
/// ErrorCategory::no_constant when no bound is known for d.
RatioReport ratio_ceiling(Problem problem, int d, int p, double best_tree_value);

// ---------------------------------------------------------------------------
// Pruning a bitstring into an independent set.

struct PruneStep {
    Edge edge;
    Vertex zeroed = 0;
    Rational cost_after;
};

struct PruneResult {
    Bitstring input;
    Bitstring output;
    Rational input_cost;
    Rational output_cost;
    std::size_t output_set_size = 0;
    std::vector<PruneStep> steps;
};

/// While some edge has both endpoints set, clears the larger endpoint of the
/// lexicographically smallest such edge. `g` must be d-regular.
PruneResult prune(const Graph &g, const Bitstring &bits, int d);

bool is_independent_set(const Graph &g, const Bitstring &bits);

// ---------------------------------------------------------------------------
// Locality: full-graph edge expectations against neighborhood computations.

struct LocalityGraphResult {
    std::size_t edges = 0;
    std::size_t tree_edges = 0;
    double max_discrepancy_subgraph = 0.0;   // vs the extracted neighborhood
    double max_discrepancy_canonical = 0.0;  // vs the canonical tree (regular hosts)
};

LocalityGraphResult locality_check_graph(const Graph &g, int p, const CostModel &model, const QaoaParams &params,
                                         InitialState initial, const SimOptions &options = {});

struct LocalityConfig {
    EnsembleSpec spec;
    int depth = 1;
    Problem problem = Problem::max_cut;
    InitialState initial = InitialState::plus_product;
    int trials = 20;
    int params_per_graph = 10;
    double tolerance = 1e-9;
};

struct LocalityReport {
    LocalityConfig config;
    std::size_t graphs = 0;
    std::size_t edges_checked = 0;
    std::size_t tree_edges = 0;
    double max_discrepancy = 0.0;
    bool no_tree_edges = false;
    bool passed = false;
};

/// Random angles are drawn uniformly from the search domain.
LocalityReport locality_check(const LocalityConfig &config, const SimOptions &options = {});

// ---------------------------------------------------------------------------
// General vs bipartite ensembles on full simulations.

struct EnsembleStats {
    double mean = 0.0;  // per-edge expectation averaged over graphs
    double std_error = 0.0;
    double nontree_fraction = 0.0;
    std::size_t samples = 0;
};

struct EquivalenceRow {
    std::size_t n = 0;
    EnsembleStats general;
    EnsembleStats bipartite;
    double gap = 0.0;
    double gap_band = 0.0;
    double general_band = 0.0;
    double bipartite_band = 0.0;
    bool ensembles_agree = false;
    bool general_matches_tree = false;
    bool bipartite_matches_tree = false;
};

struct EquivalenceConfig {
    std::vector<std::size_t> n_list;
    int d = 3;
    int depth = 1;
    Problem problem = Problem::max_cut;
    InitialState initial = InitialState::plus_product;
    QaoaParams params;
    int trials = 100;
    std::uint64_t seed = 0;
};

struct EquivalenceReport {
    EquivalenceConfig config;
    double tree_value = 0.0;
    double cost_range = 0.0;
    std::vector<EquivalenceRow> rows;
    bool finite_size_flag = true;
};

/// Bands: 3 combined standard errors plus (non-tree fraction) x (edge cost
/// range), which bounds what non-tree edges can move a per-edge mean.
EquivalenceReport ensemble_equivalence(const EquivalenceConfig &config, const SimOptions &options = {});

// ---------------------------------------------------------------------------
// Graph-only Monte Carlo experiments.

/// Asymptotic mean number of k-cycles: (d-1)^k / (2k) for the general
/// ensemble; (d-1)^k / k for even k and 0 for odd k in the bipartite one.
double expected_cycle_count(EnsembleKind kind, int d, int k);

struct CycleLengthStats {
    int length = 0;
    double mean = 0.0;
    double variance = 0.0;
    double std_error = 0.0;
    double oracle = 0.0;
    bool within_band = false;  // |mean - oracle| <= 3 std_error
};

struct CycleCensusReport {
    EnsembleSpec spec;  // seed is the base seed
    int max_length = 0;
    int trials = 0;
    std::vector<CycleLengthStats> lengths;
    std::optional<bool> odd_cycles_zero;  // bipartite only
};

CycleCensusReport cycle_census_experiment(const EnsembleSpec &spec, int max_length, int trials);

struct TreeFractionRow {
    int depth = 0;
    double mean_fraction = 0.0;
    double std_error = 0.0;
    double min_fraction = 0.0;
    double light_cone_size = 0.0;  // (d-1)^(2p)
    double exponent = 0.0;         // log((d-1)^(2p)) / log(n)
    bool below_threshold = false;  // exponent < 1
};

struct TreeFractionReport {
    EnsembleSpec spec;
    int trials = 0;
    std::vector<TreeFractionRow> rows;
};

TreeFractionReport tree_fraction_experiment(const EnsembleSpec &spec, const std::vector<int> &depths, int trials);

// ---------------------------------------------------------------------------
// Whole pipeline.

struct EndToEndConfig {
    EnsembleSpec spec;
    int depth = 1;
    Problem problem = Problem::max_cut;
    InitialState initial = InitialState::plus_product;
    OptimizerConfig optimizer;
    int full_sim_trials = 4;
    std::size_t samples = 64;
};

struct SampleSummary {
    std::size_t samples = 0;
    double mean_cost = 0.0;
    bool all_independent = true;    // MIS: after pruning
    bool all_size_ge_cost = true;   // MIS: where cost > 0
    double mean_pruned_size = 0.0;  // MIS
};

struct EndToEndReport {
    EndToEndConfig config;
    OptResult optimum;
    EnsemblePrediction prediction;
    double full_sim_per_edge = 0.0;
    double full_sim_nontree_fraction = 0.0;
    std::optional<RatioReport> ratio;
    std::string ratio_error;
    SampleSummary sampling;
};

EndToEndReport end_to_end(const EndToEndConfig &config, const SimOptions &options = {});

// ---------------------------------------------------------------------------
// JSON serialization. Every report carries schema_version and the
// finite-size flag.

nlohmann::json to_json(const QaoaParams &params);
nlohmann::json to_json(const OptResult &result, bool include_trace = false);
nlohmann::json to_json(const RatioReport &report);
nlohmann::json to_json(const PruneResult &result);
nlohmann::json to_json(const LocalityReport &report);
nlohmann::json to_json(const EquivalenceReport &report);
nlohmann::json to_json(const CycleCensus &census);
nlohmann::json to_json(const CycleCensusReport &report);
nlohmann::json to_json(const TreeFractionReport &report);
nlohmann::json to_json(const EndToEndReport &report);

std::string to_csv(const CycleCensusReport &report);
std::string to_csv(const TreeFractionReport &report);

std::string_view kind_name(EnsembleKind kind);
EnsembleKind parse_kind(std::string_view name);

}  // namespace lightcone
