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
#include <cstdio>
#include <string>
#include <vector>

#include "lightcone/error.hpp"
#include "lightcone/experiments.hpp"
#include "lightcone/rng.hpp"

namespace lightcone {

namespace {

// Absorbs floating-point noise when a band collapses to zero width.
constexpr double kRoundingSlack = 1e-12;

CostModel model_for(Problem problem, int d) {
    return problem == Problem::max_cut ? CostModel::max_cut() : CostModel::mis(d);
}

double edge_cost_range(const CostModel &model) {
    double lo = 0.0;
    double hi = 0.0;
    for (int k = 0; k < 4; ++k) {
        double c = model.edge_cost_value((k & 1) != 0, (k & 2) != 0);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    return hi - lo;
}

QaoaParams random_params(Rng &rng, const SearchDomain &domain) {
    QaoaParams params = QaoaParams::zeros(domain.depth);
    for (auto &g : params.gammas) {
        g = uniform_unit(rng) * domain.gamma_period;
    }
    for (auto &b : params.betas) {
        b = uniform_unit(rng) * domain.beta_period;
    }
    return params;
}

struct Moments {
    double mean = 0.0;
    double variance = 0.0;  // unbiased
    double std_error = 0.0;
};

Moments moments(const std::vector<double> &xs) {
    Moments m;
    if (xs.empty()) {
        return m;
    }
    for (double x : xs) {
        m.mean += x;
    }
    m.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        for (double x : xs) {
            m.variance += (x - m.mean) * (x - m.mean);
        }
        m.variance /= static_cast<double>(xs.size() - 1);
        m.std_error = std::sqrt(m.variance / static_cast<double>(xs.size()));
    }
    return m;
}

EnsembleSpec trial_spec(EnsembleSpec spec, std::uint64_t stream) {
    spec.seed = derive_seed(spec.seed, stream);
    return spec;
}

void check_trials(int trials) {
    if (trials < 1) {
        fail_input("trial count must be positive");
    }
}

}  // namespace

std::string_view kind_name(EnsembleKind kind) {
    return kind == EnsembleKind::general ? "general" : "bipartite";
}

EnsembleKind parse_kind(std::string_view name) {
    if (name == "general") {
        return EnsembleKind::general;
    }
    if (name == "bipartite") {
        return EnsembleKind::bipartite;
    }
    fail_input("unknown ensemble kind '" + std::string(name) + "' (expected general or bipartite)");
}

// ---------------------------------------------------------------------------

LocalityGraphResult locality_check_graph(const Graph &g, int p, const CostModel &model, const QaoaParams &params,
                                         InitialState initial, const SimOptions &options) {
    if (params.depth() != p) {
        fail_input("parameter depth does not match radius");
    }
    const Statevector full = run_qaoa(g, model, params, initial, options);
    std::optional<double> canonical;
    if (g.degree() && *g.degree() >= 2) {
        canonical = tree_expectation(*g.degree(), p, model, params, initial, options).value;
    }
    LocalityGraphResult out;
    out.edges = g.num_edges();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        Neighborhood hood = edge_neighborhood(g, e, p);
        if (!hood.is_tree) {
            continue;
        }
        ++out.tree_edges;
        double host = expect_edge(full, g.edge(e), model, options.backend);
        Statevector local = run_qaoa(hood.subgraph, model, params, initial, options);
        double sub = expect_edge(local, hood.subgraph.edge(hood.middle_edge), model, options.backend);
        out.max_discrepancy_subgraph = std::max(out.max_discrepancy_subgraph, std::abs(host - sub));
        if (canonical) {
            out.max_discrepancy_canonical = std::max(out.max_discrepancy_canonical, std::abs(host - *canonical));
        }
    }
    return out;
}

LocalityReport locality_check(const LocalityConfig &config, const SimOptions &options) {
    check_trials(config.trials);
    if (config.params_per_graph < 1) {
        fail_input("params_per_graph must be positive");
    }
    validate(config.spec);
    if (config.spec.n > options.qubit_cap) {
        fail_resource("locality check needs " + std::to_string(config.spec.n) + " qubits; cap is " +
                      std::to_string(options.qubit_cap));
    }
    const CostModel model = model_for(config.problem, config.spec.d);
    const SearchDomain domain = SearchDomain::for_model(model, config.depth);

    std::vector<LocalityGraphResult> per_trial(static_cast<std::size_t>(config.trials));
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < config.trials; ++t) {
        const EnsembleSpec spec = trial_spec(config.spec, static_cast<std::uint64_t>(t));
        const Graph g = generate(spec);
        Rng rng(derive_seed(spec.seed, 0xA11CE));
        LocalityGraphResult merged;
        for (int k = 0; k < config.params_per_graph; ++k) {
            LocalityGraphResult r =
                locality_check_graph(g, config.depth, model, random_params(rng, domain), config.initial, options);
            merged.edges += r.edges;
            merged.tree_edges += r.tree_edges;
            merged.max_discrepancy_subgraph = std::max(merged.max_discrepancy_subgraph, r.max_discrepancy_subgraph);
            merged.max_discrepancy_canonical =
                std::max(merged.max_discrepancy_canonical, r.max_discrepancy_canonical);
        }
        per_trial[static_cast<std::size_t>(t)] = merged;
    }

    LocalityReport report;
    report.config = config;
    report.graphs = per_trial.size();
    for (const auto &r : per_trial) {
        report.edges_checked += r.edges;
        report.tree_edges += r.tree_edges;
        report.max_discrepancy =
            std::max({report.max_discrepancy, r.max_discrepancy_subgraph, r.max_discrepancy_canonical});
    }
    report.no_tree_edges = report.tree_edges == 0;
    report.passed = report.max_discrepancy < config.tolerance;
    return report;
}

// ---------------------------------------------------------------------------

EquivalenceReport ensemble_equivalence(const EquivalenceConfig &config, const SimOptions &options) {
    check_trials(config.trials);
    if (config.params.depth() != config.depth) {
        fail_input("parameter depth does not match p");
    }
    for (std::size_t n : config.n_list) {
        if (n > options.qubit_cap) {
            fail_resource("ensemble equivalence needs " + std::to_string(n) + " qubits; cap is " +
                          std::to_string(options.qubit_cap));
        }
        validate({n, config.d, EnsembleKind::general, 0});
        validate({n, config.d, EnsembleKind::bipartite, 0});
    }
    const CostModel model = model_for(config.problem, config.d);
    EquivalenceReport report;
    report.config = config;
    report.tree_value = tree_expectation(config.d, config.depth, model, config.params, config.initial, options).value;
    report.cost_range = edge_cost_range(model);

    for (std::size_t n : config.n_list) {
        const auto trials = static_cast<std::size_t>(config.trials);
        std::vector<double> per_edge(2 * trials);
        std::vector<double> nontree(2 * trials);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(2 * trials); ++i) {
            const auto slot = static_cast<std::size_t>(i);
            const EnsembleKind kind = slot % 2 == 0 ? EnsembleKind::general : EnsembleKind::bipartite;
            EnsembleSpec spec{n, config.d, kind, derive_seed(config.seed, n)};
            const Graph g = generate(trial_spec(spec, slot));
            const CostTable table(g, model, options);
            const Statevector state = run_qaoa(table, config.params, config.initial, options);
            per_edge[slot] = expect_total(state, table, options.backend) / static_cast<double>(g.num_edges());
            nontree[slot] = 1.0 - tree_edge_fraction(g, config.depth);
        }
        auto stats_for = [&](std::size_t parity) {
            std::vector<double> values;
            std::vector<double> fractions;
            for (std::size_t t = 0; t < trials; ++t) {
                values.push_back(per_edge[2 * t + parity]);
                fractions.push_back(nontree[2 * t + parity]);
            }
            Moments m = moments(values);
            return EnsembleStats{m.mean, m.std_error, moments(fractions).mean, trials};
        };
        EquivalenceRow row;
        row.n = n;
        row.general = stats_for(0);
        row.bipartite = stats_for(1);
        row.gap = std::abs(row.general.mean - row.bipartite.mean);
        row.gap_band = 3.0 * std::hypot(row.general.std_error, row.bipartite.std_error) +
                       (row.general.nontree_fraction + row.bipartite.nontree_fraction) * report.cost_range;
        row.general_band = 3.0 * row.general.std_error + row.general.nontree_fraction * report.cost_range;
        row.bipartite_band = 3.0 * row.bipartite.std_error + row.bipartite.nontree_fraction * report.cost_range;
        row.ensembles_agree = row.gap <= row.gap_band + kRoundingSlack;
        row.general_matches_tree = std::abs(row.general.mean - report.tree_value) <= row.general_band + kRoundingSlack;
        row.bipartite_matches_tree =
            std::abs(row.bipartite.mean - report.tree_value) <= row.bipartite_band + kRoundingSlack;
        report.rows.push_back(row);
    }
    return report;
}

// ---------------------------------------------------------------------------

double expected_cycle_count(EnsembleKind kind, int d, int k) {
    const double walks = std::pow(static_cast<double>(d - 1), k);
    if (kind == EnsembleKind::general) {
        return walks / (2.0 * k);
    }
    return k % 2 == 0 ? walks / k : 0.0;
}

CycleCensusReport cycle_census_experiment(const EnsembleSpec &spec, int max_length, int trials) {
    check_trials(trials);
    validate(spec);
    if (max_length < 3) {
        fail_input("maximum cycle length must be at least 3");
    }
    std::vector<CycleCensus> censuses(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < trials; ++t) {
        censuses[static_cast<std::size_t>(t)] =
            count_cycles(generate(trial_spec(spec, static_cast<std::uint64_t>(t))), max_length);
    }
    CycleCensusReport report;
    report.spec = spec;
    report.max_length = max_length;
    report.trials = trials;
    bool odd_zero = true;
    for (int k = 3; k <= max_length; ++k) {
        std::vector<double> counts;
        for (const auto &c : censuses) {
            counts.push_back(static_cast<double>(c.counts.at(k)));
            if (k % 2 == 1 && c.counts.at(k) != 0) {
                odd_zero = false;
            }
        }
        Moments m = moments(counts);
        CycleLengthStats s;
        s.length = k;
        s.mean = m.mean;
        s.variance = m.variance;
        s.std_error = m.std_error;
        s.oracle = expected_cycle_count(spec.kind, spec.d, k);
        s.within_band = std::abs(s.mean - s.oracle) <= 3.0 * s.std_error;
        report.lengths.push_back(s);
    }
    if (spec.kind == EnsembleKind::bipartite) {
        report.odd_cycles_zero = odd_zero;
    }
    return report;
}

TreeFractionReport tree_fraction_experiment(const EnsembleSpec &spec, const std::vector<int> &depths, int trials) {
    check_trials(trials);
    validate(spec);
    std::vector<Graph> graphs(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < trials; ++t) {
        graphs[static_cast<std::size_t>(t)] = generate(trial_spec(spec, static_cast<std::uint64_t>(t)));
    }
    TreeFractionReport report;
    report.spec = spec;
    report.trials = trials;
    for (int p : depths) {
        if (p < 0) {
            fail_input("radius must be non-negative");
        }
        std::vector<double> fractions(graphs.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(graphs.size()); ++t) {
            fractions[static_cast<std::size_t>(t)] = tree_edge_fraction(graphs[static_cast<std::size_t>(t)], p);
        }
        Moments m = moments(fractions);
        TreeFractionRow row;
        row.depth = p;
        row.mean_fraction = m.mean;
        row.std_error = m.std_error;
        row.min_fraction = *std::min_element(fractions.begin(), fractions.end());
        row.light_cone_size = std::pow(static_cast<double>(spec.d - 1), 2 * p);
        row.exponent = spec.d > 2 ? std::log(row.light_cone_size) / std::log(static_cast<double>(spec.n)) : 0.0;
        row.below_threshold = row.exponent < 1.0;
        report.rows.push_back(row);
    }
    return report;
}

// ---------------------------------------------------------------------------

EndToEndReport end_to_end(const EndToEndConfig &config, const SimOptions &options) {
    validate(config.spec);
    if (config.full_sim_trials < 1) {
        fail_input("full_sim_trials must be positive");
    }
    const int d = config.spec.d;
    const CostModel model = model_for(config.problem, d);
    EndToEndReport report;
    report.config = config;

    const TreeObjective objective(d, config.depth, model, config.initial, options);
    report.optimum = optimize(objective, config.optimizer);
    report.prediction = predicted_ensemble_cost(config.spec.n, d, report.optimum.best_value);

    std::vector<double> per_edge;
    std::vector<double> nontree;
    std::optional<Statevector> first_state;
    std::optional<Graph> first_graph;
    for (int t = 0; t < config.full_sim_trials; ++t) {
        Graph g = generate(trial_spec(config.spec, static_cast<std::uint64_t>(t)));
        const CostTable table(g, model, options);
        Statevector state = run_qaoa(table, report.optimum.best_params, config.initial, options);
        per_edge.push_back(expect_total(state, table, options.backend) / static_cast<double>(g.num_edges()));
        nontree.push_back(1.0 - tree_edge_fraction(g, config.depth));
        if (t == 0) {
            first_state.emplace(std::move(state));
            first_graph.emplace(std::move(g));
        }
    }
    report.full_sim_per_edge = moments(per_edge).mean;
    report.full_sim_nontree_fraction = moments(nontree).mean;

    try {
        report.ratio = ratio_ceiling(config.problem, d, config.depth, report.optimum.best_value);
    } catch (const Error &e) {
        if (e.category() != ErrorCategory::no_constant) {
            throw;
        }
        report.ratio_error = e.what();
    }

    SampleSummary &summary = report.sampling;
    const auto samples = sample_bitstrings(*first_state, config.samples, derive_seed(config.spec.seed, 0x5A3F));
    summary.samples = samples.size();
    double cost_sum = 0.0;
    double size_sum = 0.0;
    for (const Bitstring &b : samples) {
        Rational cost = exact_cost_value(model, *first_graph, b);
        cost_sum += cost.value();
        if (config.problem == Problem::mis) {
            PruneResult pr = prune(*first_graph, b, d);
            summary.all_independent = summary.all_independent && is_independent_set(*first_graph, pr.output);
            if (cost.num > 0) {
                summary.all_size_ge_cost =
                    summary.all_size_ge_cost &&
                    static_cast<std::int64_t>(pr.output_set_size) * cost.den >= cost.num;
            }
            size_sum += static_cast<double>(pr.output_set_size);
        }
    }
    if (!samples.empty()) {
        summary.mean_cost = cost_sum / static_cast<double>(samples.size());
        summary.mean_pruned_size = size_sum / static_cast<double>(samples.size());
    }
    return report;
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

using nlohmann::json;

json spec_json(const EnsembleSpec &spec) {
    return {{"n", spec.n}, {"d", spec.d}, {"kind", kind_name(spec.kind)}, {"seed", spec.seed}};
}

json stamp(json body, std::string_view report) {
    body["schema_version"] = kReportSchemaVersion;
    body["report"] = report;
    body["finite_size_correction_unquantified"] = true;
    return body;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

json to_json(const QaoaParams &params) {
    return {{"gamma", params.gammas}, {"beta", params.betas}};
}

json to_json(const OptResult &result, bool include_trace) {
    json out = {{"best_params", to_json(result.best_params)},
                {"best_value", result.best_value},
                {"grid_resolution", result.grid_resolution},
                {"refinement_iterations", result.refinement_iterations},
                {"converged", result.converged},
                {"evaluations", result.trace.size()}};
    if (include_trace) {
        json trace = json::array();
        for (const auto &ev : result.trace) {
            trace.push_back({{"params", to_json(ev.params)}, {"value", ev.value}});
        }
        out["trace"] = std::move(trace);
    }
    return out;
}

json to_json(const RatioReport &report) {
    return stamp({{"model", problem_name(report.problem)},
                  {"d", report.degree},
                  {"p", report.depth},
                  {"tree_value", report.tree_value},
                  {"ceiling", report.ceiling},
                  {"achieved_ratio", report.achieved_ratio},
                  {"within_ceiling", report.within_ceiling},
                  {"asymptotic_constant", report.asymptotic_constant},
                  {"provenance", report.provenance},
                  {"large_d_statement", report.large_d_statement}},
                 "ratio-bound");
}

json to_json(const PruneResult &result) {
    json steps = json::array();
    for (const auto &s : result.steps) {
        steps.push_back({{"edge", {s.edge.u, s.edge.v}},
                         {"zeroed", s.zeroed},
                         {"cost_after", std::to_string(s.cost_after.num) + "/" + std::to_string(s.cost_after.den)}});
    }
    return stamp({{"input", to_string(result.input)},
                  {"output", to_string(result.output)},
                  {"input_cost", result.input_cost.value()},
                  {"input_cost_exact", std::to_string(result.input_cost.num) + "/" +
                                           std::to_string(result.input_cost.den)},
                  {"output_cost", result.output_cost.value()},
                  {"output_set_size", result.output_set_size},
                  {"steps", std::move(steps)}},
                 "prune");
}

json to_json(const LocalityReport &report) {
    const auto &c = report.config;
    return stamp({{"ensemble", spec_json(c.spec)},
                  {"p", c.depth},
                  {"model", problem_name(c.problem)},
                  {"init", initial_state_name(c.initial)},
                  {"trials", c.trials},
                  {"params_per_graph", c.params_per_graph},
                  {"tolerance", c.tolerance},
                  {"graphs", report.graphs},
                  {"edges_checked", report.edges_checked},
                  {"tree_edges", report.tree_edges},
                  {"max_discrepancy", report.max_discrepancy},
                  {"status", report.no_tree_edges ? "no tree edges" : (report.passed ? "pass" : "fail")},
                  {"passed", report.passed}},
                 "locality-check");
}

json to_json(const EquivalenceReport &report) {
    const auto &c = report.config;
    auto stats = [](const EnsembleStats &s) {
        return json{{"mean", s.mean}, {"std_error", s.std_error}, {"nontree_fraction", s.nontree_fraction},
                    {"samples", s.samples}};
    };
    json rows = json::array();
    for (const auto &r : report.rows) {
        rows.push_back({{"n", r.n},
                        {"general", stats(r.general)},
                        {"bipartite", stats(r.bipartite)},
                        {"gap", r.gap},
                        {"gap_band", r.gap_band},
                        {"general_band", r.general_band},
                        {"bipartite_band", r.bipartite_band},
                        {"ensembles_agree", r.ensembles_agree},
                        {"general_matches_tree", r.general_matches_tree},
                        {"bipartite_matches_tree", r.bipartite_matches_tree}});
    }
    return stamp({{"d", c.d},
                  {"p", c.depth},
                  {"model", problem_name(c.problem)},
                  {"init", initial_state_name(c.initial)},
                  {"params", to_json(c.params)},
                  {"trials", c.trials},
                  {"seed", c.seed},
                  {"tree_value", report.tree_value},
                  {"cost_range", report.cost_range},
                  {"rows", std::move(rows)}},
                 "equivalence");
}

json to_json(const CycleCensus &census) {
    json counts = json::object();
    for (const auto &[k, v] : census.counts) {
        counts[std::to_string(k)] = v;
    }
    return stamp({{"kmax", census.max_length}, {"counts", std::move(counts)}}, "cycles");
}

json to_json(const CycleCensusReport &report) {
    json lengths = json::array();
    for (const auto &s : report.lengths) {
        lengths.push_back({{"k", s.length},
                           {"mean", s.mean},
                           {"variance", s.variance},
                           {"std_error", s.std_error},
                           {"oracle", s.oracle},
                           {"within_band", s.within_band}});
    }
    json out = {{"ensemble", spec_json(report.spec)},
                {"kmax", report.max_length},
                {"trials", report.trials},
                {"lengths", std::move(lengths)}};
    if (report.odd_cycles_zero) {
        out["odd_cycles_zero"] = *report.odd_cycles_zero;
    }
    return stamp(std::move(out), "cycle-census");
}

json to_json(const TreeFractionReport &report) {
    json rows = json::array();
    for (const auto &r : report.rows) {
        rows.push_back({{"p", r.depth},
                        {"mean_fraction", r.mean_fraction},
                        {"std_error", r.std_error},
                        {"min_fraction", r.min_fraction},
                        {"light_cone_size", r.light_cone_size},
                        {"exponent", r.exponent},
                        {"below_threshold", r.below_threshold}});
    }
    return stamp({{"ensemble", spec_json(report.spec)}, {"trials", report.trials}, {"rows", std::move(rows)}},
                 "tree-fraction");
}

json to_json(const EndToEndReport &report) {
    const auto &c = report.config;
    json out = {{"ensemble", spec_json(c.spec)},
                {"p", c.depth},
                {"model", problem_name(c.problem)},
                {"init", initial_state_name(c.initial)},
                {"optimum", to_json(report.optimum)},
                {"predicted_ensemble_cost", report.prediction.leading_term},
                {"full_sim_trials", c.full_sim_trials},
                {"full_sim_per_edge", report.full_sim_per_edge},
                {"full_sim_nontree_fraction", report.full_sim_nontree_fraction},
                {"sampling",
                 {{"samples", report.sampling.samples},
                  {"mean_cost", report.sampling.mean_cost},
                  {"all_independent", report.sampling.all_independent},
                  {"all_size_ge_cost", report.sampling.all_size_ge_cost},
                  {"mean_pruned_size", report.sampling.mean_pruned_size}}}};
    if (report.ratio) {
        out["ratio"] = to_json(*report.ratio);
    } else {
        out["ratio"] = nullptr;
        out["ratio_error"] = report.ratio_error;
    }
    return stamp(std::move(out), "end-to-end");
}

std::string to_csv(const CycleCensusReport &report) {
    std::string out = "k,mean,variance,std_error,oracle,within_band\n";
    for (const auto &s : report.lengths) {
        out += std::to_string(s.length) + "," + format_double(s.mean) + "," + format_double(s.variance) + "," +
               format_double(s.std_error) + "," + format_double(s.oracle) + "," + (s.within_band ? "1" : "0") + "\n";
    }
    return out;
}

std::string to_csv(const TreeFractionReport &report) {
    std::string out = "p,mean_fraction,std_error,min_fraction,light_cone_size,exponent,below_threshold\n";
    for (const auto &r : report.rows) {
        out += std::to_string(r.depth) + "," + format_double(r.mean_fraction) + "," + format_double(r.std_error) +
               "," + format_double(r.min_fraction) + "," + format_double(r.light_cone_size) + "," +
               format_double(r.exponent) + "," + (r.below_threshold ? "1" : "0") + "\n";
    }
    return out;
}

}  // namespace lightcone
