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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lightcone/commands.hpp"
#include "lightcone/error.hpp"
#include "lightcone/experiments.hpp"

namespace lightcone {

namespace {

using nlohmann::json;

// Argument access with input-category errors.
class Args {
   public:
    explicit Args(const json &args) : args_(args) {
        if (!args_.is_object()) {
            fail_input("command arguments must be a JSON object");
        }
    }

    bool has(const char *key) const {
        return args_.contains(key) && !args_.at(key).is_null();
    }

    template <typename T>
    T get(const char *key) const {
        if (!has(key)) {
            fail_input(std::string("missing argument '") + key + "'");
        }
        try {
            return args_.at(key).get<T>();
        } catch (const json::exception &) {
            fail_input(std::string("argument '") + key + "' has the wrong type");
        }
    }

    template <typename T>
    T get_or(const char *key, T fallback) const {
        return has(key) ? get<T>(key) : fallback;
    }

    // Accepts a JSON array or a comma-separated string.
    template <typename T>
    std::vector<T> list(const char *key) const {
        if (!has(key)) {
            fail_input(std::string("missing argument '") + key + "'");
        }
        const json &value = args_.at(key);
        if (value.is_array()) {
            return get<std::vector<T>>(key);
        }
        if (!value.is_string()) {
            fail_input(std::string("argument '") + key + "' must be a list");
        }
        std::vector<T> out;
        std::stringstream ss(value.get<std::string>());
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.find_first_not_of(" \t") == std::string::npos) {
                continue;
            }
            std::istringstream parse(item);
            T x{};
            std::string rest;
            if (!(parse >> x) || (parse >> rest)) {
                fail_input(std::string("cannot parse '") + item + "' in argument '" + key + "'");
            }
            out.push_back(x);
        }
        return out;
    }

    Problem problem() const {
        return parse_problem(get<std::string>("model"));
    }
    InitialState initial() const {
        return parse_initial_state(get_or<std::string>("init", "plus"));
    }
    EnsembleKind kind() const {
        return parse_kind(get_or<std::string>("kind", "general"));
    }
    EnsembleSpec spec() const {
        return {get<std::size_t>("n"), get<int>("d"), kind(), get_or<std::uint64_t>("seed", 0)};
    }
    OptimizerConfig optimizer() const {
        OptimizerConfig config;
        config.resolution = get_or<int>("resolution", 0);
        config.budget = get_or<std::uint64_t>("budget", kDefaultEvaluationBudget);
        config.top_k = get_or<int>("top_k", config.top_k);
        return config;
    }

   private:
    const json &args_;
};

CostModel model_of(Problem problem, int d) {
    return problem == Problem::max_cut ? CostModel::max_cut() : CostModel::mis(d);
}

json with_stamp(json body, std::string_view report) {
    body["schema_version"] = kReportSchemaVersion;
    body["report"] = report;
    body["finite_size_correction_unquantified"] = true;
    return body;
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCategory::io, "cannot write '" + path + "'");
    }
    out << text;
}

json cmd_generate(const Args &a) {
    EnsembleSpec spec = a.spec();
    Graph g = generate(spec);
    std::ostringstream text;
    write_edge_list(text, g);
    json out = {{"ensemble", {{"n", spec.n}, {"d", spec.d}, {"kind", kind_name(spec.kind)}, {"seed", spec.seed}}},
                {"edges", g.num_edges()}};
    if (a.has("out")) {
        write_text(a.get<std::string>("out"), text.str());
        out["out"] = a.get<std::string>("out");
    } else {
        out["edge_list"] = text.str();
    }
    return with_stamp(std::move(out), "generate");
}

json cmd_cycles(const Args &a) {
    const int kmax = a.get<int>("kmax");
    if (a.has("in")) {
        return to_json(count_cycles(read_edge_list_file(a.get<std::string>("in")), kmax));
    }
    CycleCensusReport report = cycle_census_experiment(a.spec(), kmax, a.get_or<int>("trials", 1));
    if (a.has("csv")) {
        write_text(a.get<std::string>("csv"), to_csv(report));
    }
    return to_json(report);
}

json cmd_tree_fraction(const Args &a) {
    if (a.has("in")) {
        Graph g = read_edge_list_file(a.get<std::string>("in"));
        json rows = json::array();
        for (int p : a.list<int>("p_list")) {
            rows.push_back({{"p", p}, {"fraction", tree_edge_fraction(g, p)}});
        }
        return with_stamp({{"in", a.get<std::string>("in")}, {"rows", std::move(rows)}}, "tree-fraction");
    }
    TreeFractionReport report = tree_fraction_experiment(a.spec(), a.list<int>("p_list"), a.get_or<int>("trials", 1));
    if (a.has("csv")) {
        write_text(a.get<std::string>("csv"), to_csv(report));
    }
    return to_json(report);
}

json cmd_tree_expect(const Args &a) {
    const int d = a.get<int>("d");
    const int p = a.get<int>("p");
    QaoaParams params{a.list<double>("gamma"), a.list<double>("beta")};
    TreeExpectation te = tree_expectation(d, p, model_of(a.problem(), d), params, a.initial());
    return with_stamp({{"d", d},
                       {"p", p},
                       {"model", problem_name(a.problem())},
                       {"init", initial_state_name(te.initial)},
                       {"params", to_json(te.params)},
                       {"value", te.value}},
                      "tree-expect");
}

json cmd_optimize(const Args &a) {
    const int d = a.get<int>("d");
    const int p = a.get<int>("p");
    OptResult result = optimize(d, p, model_of(a.problem(), d), a.initial(), a.optimizer());
    return with_stamp({{"d", d},
                       {"p", p},
                       {"model", problem_name(a.problem())},
                       {"init", initial_state_name(a.initial())},
                       {"seed", a.get_or<std::uint64_t>("seed", 0)},
                       {"result", to_json(result, a.get_or<bool>("trace", false))}},
                      "optimize");
}

json cmd_locality(const Args &a) {
    LocalityConfig config;
    config.spec = {a.get<std::size_t>("n"), a.get<int>("d"), a.kind(), a.get_or<std::uint64_t>("seed", 0)};
    config.depth = a.get<int>("p");
    config.problem = a.problem();
    config.initial = a.initial();
    config.trials = a.get_or<int>("trials", config.trials);
    config.params_per_graph = a.get_or<int>("params_per_graph", config.params_per_graph);
    return to_json(locality_check(config));
}

QaoaParams params_or_optimum(const Args &a, int d, int p, Problem problem, InitialState initial) {
    if (a.has("gamma") || a.has("beta")) {
        return {a.list<double>("gamma"), a.list<double>("beta")};
    }
    return optimize(d, p, model_of(problem, d), initial, a.optimizer()).best_params;
}

json cmd_equivalence(const Args &a) {
    EquivalenceConfig config;
    config.n_list = a.list<std::size_t>("n_list");
    config.d = a.get<int>("d");
    config.depth = a.get<int>("p");
    config.problem = a.problem();
    config.initial = a.initial();
    config.trials = a.get_or<int>("trials", config.trials);
    config.seed = a.get_or<std::uint64_t>("seed", 0);
    config.params = params_or_optimum(a, config.d, config.depth, config.problem, config.initial);
    return to_json(ensemble_equivalence(config));
}

json cmd_ratio_bound(const Args &a) {
    const int d = a.get<int>("d");
    const int p = a.get<int>("p");
    const Problem problem = a.problem();
    double value = 0.0;
    if (a.has("tree_value")) {
        value = a.get<double>("tree_value");
    } else if (a.get_or<bool>("optimize", false)) {
        value = optimize(d, p, model_of(problem, d), a.initial(), a.optimizer()).best_value;
    } else {
        fail_input("ratio-bound needs --tree-value or --optimize");
    }
    return to_json(ratio_ceiling(problem, d, p, value));
}

json cmd_prune(const Args &a) {
    Graph g = read_edge_list_file(a.get<std::string>("in"));
    return to_json(prune(g, parse_bitstring(a.get<std::string>("bits")), a.get<int>("d")));
}

json cmd_end_to_end(const Args &a) {
    EndToEndConfig config;
    config.spec = a.spec();
    config.depth = a.get<int>("p");
    config.problem = a.problem();
    config.initial = a.initial();
    config.optimizer = a.optimizer();
    config.full_sim_trials = a.get_or<int>("trials", config.full_sim_trials);
    config.samples = a.get_or<std::size_t>("samples", config.samples);
    return to_json(end_to_end(config));
}

}  // namespace

json run_command(const std::string &command, const json &raw_args) {
    Args args(raw_args);
    if (command == "generate") {
        return cmd_generate(args);
    }
    if (command == "cycles") {
        return cmd_cycles(args);
    }
    if (command == "tree-fraction") {
        return cmd_tree_fraction(args);
    }
    if (command == "tree-expect") {
        return cmd_tree_expect(args);
    }
    if (command == "optimize") {
        return cmd_optimize(args);
    }
    if (command == "locality-check") {
        return cmd_locality(args);
    }
    if (command == "equivalence") {
        return cmd_equivalence(args);
    }
    if (command == "ratio-bound") {
        return cmd_ratio_bound(args);
    }
    if (command == "prune") {
        return cmd_prune(args);
    }
    if (command == "end-to-end") {
        return cmd_end_to_end(args);
    }
    fail_input("unknown command '" + command + "'");
}

json run_config(const json &config) {
    if (!config.is_object() || !config.contains("tasks") || !config.at("tasks").is_array()) {
        fail_input("config must be an object with a 'tasks' array");
    }
    json results = json::array();
    for (const json &task : config.at("tasks")) {
        if (!task.is_object() || !task.contains("command") || !task.at("command").is_string()) {
            fail_input("each task needs a string 'command'");
        }
        json args = task;
        args.erase("command");
        results.push_back(run_command(task.at("command").get<std::string>(), args));
    }
    return {{"schema_version", kReportSchemaVersion}, {"report", "run"}, {"results", std::move(results)}};
}

}  // namespace lightcone
