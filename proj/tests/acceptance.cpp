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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "lightcone/experiments.hpp"
#include "lightcone/rng.hpp"
#include "oracles/oracles.hpp"

using namespace lightcone;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

QaoaParams random_params(Rng &rng, int p, double gamma_period) {
    QaoaParams params = QaoaParams::zeros(p);
    for (int k = 0; k < p; ++k) {
        params.gammas[k] = uniform_unit(rng) * gamma_period;
        params.betas[k] = uniform_unit(rng) * kPi;
    }
    return params;
}

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// Optimized tree values shared by criteria 4 and 8.
struct Optima {
    double maxcut[3] = {0, 0, 0};
    double mis[3] = {0, 0, 0};
};

Optima compute_optima() {
    Optima o;
    for (int p = 0; p <= 2; ++p) {
        o.maxcut[p] = optimize(3, p, CostModel::max_cut(), InitialState::plus_product).best_value;
        o.mis[p] = optimize(3, p, CostModel::mis(3), InitialState::plus_product).best_value;
    }
    return o;
}

Outcome locality() {
    Outcome out;
    std::size_t graphs = 0;
    std::size_t tree_edges = 0;
    double worst = 0.0;
    for (std::size_t n : {12, 14, 16}) {
        for (Problem problem : {Problem::max_cut, Problem::mis}) {
            LocalityConfig config;
            config.spec = {n, 3, EnsembleKind::general, 1000 + n};
            config.problem = problem;
            config.depth = 1;
            config.trials = 7;
            config.params_per_graph = 10;
            LocalityReport r = locality_check(config);
            graphs += r.graphs;
            tree_edges += r.tree_edges;
            worst = std::max(worst, r.max_discrepancy);
            out.pass = out.pass && r.passed && !r.no_tree_edges;
        }
    }
    out.pass = out.pass && graphs >= 20 && worst < 1e-9;
    out.detail = std::to_string(graphs) + " graph runs, " + std::to_string(tree_edges) +
                 " tree-edge checks, max discrepancy " + fmt("%.3g", worst);
    return out;
}

std::vector<Graph> all_small_graphs() {
    std::vector<Graph> out;
    for (std::size_t m = 1; m <= 4; ++m) {
        std::vector<Edge> pairs;
        for (Vertex u = 0; u < m; ++u) {
            for (Vertex v = u + 1; v < m; ++v) {
                pairs.push_back({u, v});
            }
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if ((mask >> i) & 1U) {
                    edges.push_back(pairs[i]);
                }
            }
            out.emplace_back(m, edges);
        }
    }
    return out;
}

Outcome dense_oracle() {
    Outcome out;
    Rng rng(2);
    double worst = 0.0;
    std::size_t cases = 0;
    const std::vector<Graph> graphs = all_small_graphs();
    for (const Graph &g : graphs) {
        for (int p = 0; p <= 2; ++p) {
            for (int d : {0, 1, 3}) {  // 0 means Max-Cut
                for (InitialState init : {InitialState::plus_product, InitialState::all_zero}) {
                    const CostModel model = d == 0 ? CostModel::max_cut() : CostModel::mis(d);
                    for (int rep = 0; rep < 3; ++rep) {
                        QaoaParams params = random_params(rng, p, 2 * kPi * static_cast<double>(model.scale()));
                        Statevector s = run_qaoa(g, model, params, init);
                        auto dense = oracle::dense_qaoa(g, d != 0, std::max(d, 1), params.gammas, params.betas,
                                                        init == InitialState::plus_product);
                        for (std::size_t i = 0; i < dense.size(); ++i) {
                            worst = std::max(worst, std::abs(s.amplitudes()[i] - dense[i]));
                        }
                        ++cases;
                    }
                }
            }
        }
    }
    out.pass = worst <= 1e-10;
    out.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(cases) + " cases, max amplitude gap " +
                 fmt("%.3g", worst);
    return out;
}

Outcome depth_one_optimum() {
    OptimizerConfig config;
    config.resolution = 64;
    OptResult r = optimize(3, 1, CostModel::max_cut(), InitialState::plus_product, config);
    Outcome out;
    out.pass = std::abs(r.best_value - 0.6924) <= 1e-3;
    out.detail = "best_value " + fmt("%.10f", r.best_value) + " at gamma " + fmt("%.6f", r.best_params.gammas[0]) +
                 ", beta " + fmt("%.6f", r.best_params.betas[0]);
    return out;
}

Outcome ratio_ceilings(const Optima &o) {
    Outcome out;
    RatioReport mc = ratio_ceiling(Problem::max_cut, 3, 1, o.maxcut[1]);
    RatioReport mis = ratio_ceiling(Problem::mis, 3, 1, o.mis[1]);
    out.pass = std::abs(mc.ceiling - 0.93507) <= 1e-5 && std::abs(mis.ceiling - 0.90800) <= 1e-5;
    std::ostringstream detail;
    detail << "ceilings " << fmt("%.5f", mc.ceiling) << " / " << fmt("%.5f", mis.ceiling);
    for (int p = 1; p <= 2; ++p) {
        RatioReport a = ratio_ceiling(Problem::max_cut, 3, p, o.maxcut[p]);
        RatioReport b = ratio_ceiling(Problem::mis, 3, p, o.mis[p]);
        out.pass = out.pass && a.achieved_ratio == o.maxcut[p] && b.achieved_ratio == 3.0 * o.mis[p];
        out.pass = out.pass && a.achieved_ratio <= a.ceiling && b.achieved_ratio <= b.ceiling;
        detail << "; p=" << p << " achieved " << fmt("%.4f", a.achieved_ratio) << " (maxcut), "
               << fmt("%.4f", b.achieved_ratio) << " (mis)";
    }
    out.detail = detail.str();
    return out;
}

Outcome cycle_census() {
    Outcome out;
    CycleCensusReport general = cycle_census_experiment({1000, 3, EnsembleKind::general, 5}, 6, 200);
    CycleCensusReport bipartite = cycle_census_experiment({1000, 3, EnsembleKind::bipartite, 5}, 6, 200);
    std::ostringstream detail;
    for (const CycleLengthStats &s : general.lengths) {
        out.pass = out.pass && s.within_band;
        detail << "k=" << s.length << " " << fmt("%.3f", s.mean) << "+-" << fmt("%.3f", s.std_error) << " vs "
               << fmt("%.3f", s.oracle) << "; ";
    }
    out.pass = out.pass && bipartite.odd_cycles_zero.value_or(false);
    detail << "bipartite odd cycles " << (bipartite.odd_cycles_zero.value_or(false) ? "all zero" : "NONZERO");
    out.detail = detail.str();
    return out;
}

Outcome equivalence(const QaoaParams &optimal) {
    Outcome out;
    EquivalenceConfig config;
    config.n_list = {12, 16, 20};
    config.d = 3;
    config.depth = 1;
    config.params = optimal;
    config.trials = 100;
    config.seed = 6;
    EquivalenceReport r = ensemble_equivalence(config);
    std::ostringstream detail;
    detail << "tree " << fmt("%.4f", r.tree_value);
    for (const EquivalenceRow &row : r.rows) {
        out.pass = out.pass && row.ensembles_agree && row.general_matches_tree && row.bipartite_matches_tree;
        detail << "; n=" << row.n << " general " << fmt("%.4f", row.general.mean) << " bipartite "
               << fmt("%.4f", row.bipartite.mean) << " gap " << fmt("%.4f", row.gap) << " band "
               << fmt("%.4f", row.gap_band);
    }
    out.detail = detail.str();
    return out;
}

Outcome pruning() {
    Outcome out;
    Rng rng(7);
    std::size_t failures = 0;
    std::size_t positive = 0;
    const int pairs = 1000;
    for (int t = 0; t < pairs; ++t) {
        const int d = 2 + t % 2;
        const std::size_t n = 2 * (3 + uniform_index(rng, 14));
        const EnsembleKind kind = uniform_index(rng, 2) == 0 ? EnsembleKind::general : EnsembleKind::bipartite;
        Graph g = generate({n, d, kind, derive_seed(7, static_cast<std::uint64_t>(t))});
        const double density = uniform_unit(rng);
        Bitstring bits(n);
        for (auto &b : bits) {
            b = uniform_unit(rng) < density ? 1 : 0;
        }
        PruneResult r = prune(g, bits, d);
        bool ok = is_independent_set(g, r.output);
        Rational prev = r.input_cost;
        for (const PruneStep &step : r.steps) {
            ok = ok && step.cost_after.num * prev.den >= prev.num * step.cost_after.den;
            prev = step.cost_after;
        }
        ok = ok && r.output_cost == exact_cost_value(CostModel::mis(d), g, r.output);
        if (r.input_cost.num > 0) {
            ++positive;
            ok = ok && static_cast<std::int64_t>(r.output_set_size) * r.input_cost.den >= r.input_cost.num;
        }
        failures += ok ? 0 : 1;
    }
    out.pass = failures == 0;
    out.detail = std::to_string(pairs) + " pairs (" + std::to_string(positive) + " with positive cost), " +
                 std::to_string(failures) + " failures";
    return out;
}

Outcome invariance(const Optima &o) {
    Outcome out;
    Rng rng(8);
    double norm_gap = 0.0;
    double linear_gap = 0.0;
    double period_gap = 0.0;
    double symmetry_gap = 0.0;
    for (int trial = 0; trial < 24; ++trial) {
        const int d = 2 + trial % 3;
        const std::size_t n = 10 + 2 * (trial % 3);
        Graph g = generate({n, d, trial % 2 == 0 ? EnsembleKind::general : EnsembleKind::bipartite,
                            static_cast<std::uint64_t>(trial)});
        const int p = 1 + trial % 3;
        for (bool mis : {false, true}) {
            const CostModel model = mis ? CostModel::mis(d) : CostModel::max_cut();
            const InitialState init = trial % 4 < 2 ? InitialState::plus_product : InitialState::all_zero;
            const SearchDomain domain = SearchDomain::for_model(model, p);
            QaoaParams params = random_params(rng, p, domain.gamma_period);

            Statevector s = prepare_initial(n, init);
            for (int k = 0; k < p; ++k) {
                apply_phase(s, g, model, params.gammas[k]);
                norm_gap = std::max(norm_gap, std::abs(s.norm() - 1.0));
                apply_mixer(s, params.betas[k]);
                norm_gap = std::max(norm_gap, std::abs(s.norm() - 1.0));
            }
            const double total = expect_total(s, g, model);
            double sum = 0.0;
            for (const Edge &e : g.edges()) {
                sum += expect_edge(s, e, model);
            }
            linear_gap = std::max(linear_gap, std::abs(total - sum));

            const int k = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(p)));
            QaoaParams shifted = params;
            shifted.gammas[k] += domain.gamma_period;
            period_gap = std::max(period_gap, std::abs(expect_total(run_qaoa(g, model, shifted, init), g, model) - total));
            shifted = params;
            shifted.betas[k] += domain.beta_period;
            period_gap = std::max(period_gap, std::abs(expect_total(run_qaoa(g, model, shifted, init), g, model) - total));

            QaoaParams negated = params;
            for (auto &x : negated.gammas) {
                x = -x;
            }
            for (auto &x : negated.betas) {
                x = -x;
            }
            symmetry_gap =
                std::max(symmetry_gap, std::abs(expect_total(run_qaoa(g, model, negated, init), g, model) - total));
        }
    }
    const bool monotone = o.maxcut[1] >= o.maxcut[0] - 1e-9 && o.maxcut[2] >= o.maxcut[1] - 1e-9 &&
                          o.mis[1] >= o.mis[0] - 1e-9 && o.mis[2] >= o.mis[1] - 1e-9;
    out.pass = norm_gap <= 1e-12 && linear_gap <= 1e-10 && period_gap <= 1e-10 && symmetry_gap <= 1e-10 && monotone;
    out.detail = "norm " + fmt("%.2g", norm_gap) + ", linearity " + fmt("%.2g", linear_gap) + ", periodicity " +
                 fmt("%.2g", period_gap) + ", symmetry " + fmt("%.2g", symmetry_gap) + ", depth optima maxcut " +
                 fmt("%.4f", o.maxcut[0]) + "/" + fmt("%.4f", o.maxcut[1]) + "/" + fmt("%.4f", o.maxcut[2]) +
                 " mis " + fmt("%.4f", o.mis[0]) + "/" + fmt("%.4f", o.mis[1]) + "/" + fmt("%.4f", o.mis[2]);
    return out;
}

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    Outcome out;
    const auto dir = std::filesystem::temp_directory_path() / "lightcone_acceptance";
    std::filesystem::create_directories(dir);
    const auto config = dir / "config.json";
    {
        std::ofstream f(config);
        f << R"({"tasks": [
  {"command": "generate", "n": 20, "d": 3, "kind": "bipartite", "seed": 3},
  {"command": "cycles", "n": 200, "d": 3, "kind": "general", "trials": 5, "kmax": 6, "seed": 4},
  {"command": "tree-fraction", "n": 100, "d": 3, "p_list": [1, 2], "trials": 5, "seed": 5},
  {"command": "optimize", "d": 3, "p": 1, "model": "mis", "resolution": 16},
  {"command": "locality-check", "n": 12, "d": 3, "p": 1, "model": "maxcut", "trials": 3, "seed": 6},
  {"command": "equivalence", "n_list": [10, 12], "d": 3, "p": 1, "model": "maxcut", "trials": 6, "seed": 7},
  {"command": "ratio-bound", "d": 3, "p": 1, "model": "maxcut", "optimize": true, "resolution": 16},
  {"command": "end-to-end", "n": 12, "d": 3, "p": 1, "model": "mis", "trials": 2, "resolution": 12, "seed": 8}
]})";
    }
    std::string reports[2];
    for (int run = 0; run < 2; ++run) {
        const auto report = dir / ("report" + std::to_string(run) + ".json");
        std::filesystem::remove(report);
        const std::string cmd =
            std::string("\"") + LIGHTCONE_CLI_PATH + "\" run --config \"" + config.string() + "\" --out \"" +
            report.string() + "\"";
        if (std::system(cmd.c_str()) != 0) {
            out.pass = false;
            out.detail = "CLI run failed: " + cmd;
            return out;
        }
        reports[run] = slurp(report);
    }
    out.pass = !reports[0].empty() && reports[0] == reports[1];
    out.detail = std::to_string(reports[0].size()) + " bytes, " + (out.pass ? "identical" : "DIFFERENT");
    return out;
}

}  // namespace

int main() {
    int failures = 0;
    auto run = [&](int id, const char *name, const std::function<Outcome()> &check) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %d: %s (%s) [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    };

    Optima optima;
    QaoaParams optimal;
    run(1, "light-cone locality", locality);
    run(2, "dense-matrix oracle equivalence", dense_oracle);
    run(3, "depth-1 Max-Cut optimum on the cubic tree", depth_one_optimum);
    run(4, "ratio ceilings", [&] {
        optima = compute_optima();
        return ratio_ceilings(optima);
    });
    run(5, "cycle census", cycle_census);
    run(6, "ensemble equivalence", [&] {
        optimal = optimize(3, 1, CostModel::max_cut(), InitialState::plus_product).best_params;
        return equivalence(optimal);
    });
    run(7, "pruning", pruning);
    run(8, "invariance suite", [&] { return invariance(optima); });
    run(9, "determinism of run --config", determinism);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
