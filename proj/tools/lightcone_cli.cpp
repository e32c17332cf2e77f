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

// Command-line front end. Every subcommand forwards to lightcone::run_command
// with its flags collected into a JSON argument object, so `run --config`
// accepts exactly the same arguments.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lightcone/commands.hpp"
#include "lightcone/error.hpp"

namespace {

using nlohmann::json;

class Flags {
   public:
    Flags(CLI::App *app, json &args) : app_(app), args_(args) {
    }

    template <typename T>
    Flags &add(const std::string &flag, const std::string &help, bool required = false) {
        std::string key = flag;
        for (char &c : key) {
            if (c == '-') {
                c = '_';
            }
        }
        json &args = args_;
        auto *opt = app_->add_option_function<T>("--" + flag, [&args, key](const T &v) { args[key] = v; }, help);
        if (required) {
            opt->required();
        }
        return *this;
    }

    Flags &flag(const std::string &flag, const std::string &help) {
        std::string key = flag;
        json &args = args_;
        app_->add_flag_callback("--" + flag, [&args, key] { args[key] = true; }, help);
        return *this;
    }

   private:
    CLI::App *app_;
    json &args_;
};

int report_error(std::string_view category, const std::string &message, int code) {
    json err = {{"error", {{"category", category}, {"message", message}}}};
    std::cerr << err.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"QAOA light-cone locality toolkit for random regular graphs"};
    app.require_subcommand(1);

    std::map<std::string, json> args;
    auto sub = [&](const std::string &name, const std::string &help) {
        CLI::App *cmd = app.add_subcommand(name, help);
        args[name] = json::object();
        return std::make_pair(cmd, Flags(cmd, args[name]));
    };
    using u64 = std::uint64_t;

    auto [generate, generate_flags] = sub("generate", "sample a random d-regular graph");
    generate_flags.add<u64>("n", "vertex count", true)
        .add<int>("d", "degree", true)
        .add<std::string>("kind", "general | bipartite")
        .add<u64>("seed", "RNG seed")
        .add<std::string>("out", "edge-list output path");

    auto [cycles, cycles_flags] = sub("cycles", "count short simple cycles");
    cycles_flags.add<std::string>("in", "edge-list input")
        .add<int>("kmax", "largest cycle length", true)
        .add<u64>("n", "vertex count")
        .add<int>("d", "degree")
        .add<std::string>("kind", "general | bipartite")
        .add<int>("trials", "number of sampled graphs")
        .add<u64>("seed", "base seed")
        .add<std::string>("csv", "CSV series output path");

    auto [fraction, fraction_flags] = sub("tree-fraction", "fraction of edges with tree neighborhoods");
    fraction_flags.add<std::string>("in", "edge-list input")
        .add<std::string>("p-list", "comma-separated radii", true)
        .add<u64>("n", "vertex count")
        .add<int>("d", "degree")
        .add<std::string>("kind", "general | bipartite")
        .add<int>("trials", "number of sampled graphs")
        .add<u64>("seed", "base seed")
        .add<std::string>("csv", "CSV series output path");

    auto [tree, tree_flags] = sub("tree-expect", "middle-edge expectation on the canonical tree");
    tree_flags.add<int>("d", "degree", true)
        .add<int>("p", "depth", true)
        .add<std::string>("model", "maxcut | mis", true)
        .add<std::string>("init", "zero | plus")
        .add<std::string>("gamma", "comma-separated gammas", true)
        .add<std::string>("beta", "comma-separated betas", true);

    auto [opt, opt_flags] = sub("optimize", "grid search plus refinement of the tree expectation");
    opt_flags.add<int>("d", "degree", true)
        .add<int>("p", "depth", true)
        .add<std::string>("model", "maxcut | mis", true)
        .add<std::string>("init", "zero | plus")
        .add<int>("resolution", "grid points per axis")
        .add<u64>("budget", "maximum grid evaluations")
        .add<int>("top-k", "refinement starts")
        .add<u64>("seed", "recorded in the report")
        .flag("trace", "include every evaluation");

    auto [loc, loc_flags] = sub("locality-check", "full simulation vs neighborhood computation");
    loc_flags.add<u64>("n", "vertex count", true)
        .add<int>("d", "degree", true)
        .add<int>("p", "depth", true)
        .add<std::string>("model", "maxcut | mis", true)
        .add<std::string>("kind", "general | bipartite")
        .add<std::string>("init", "zero | plus")
        .add<int>("trials", "number of sampled graphs")
        .add<int>("params-per-graph", "random angle draws per graph")
        .add<u64>("seed", "base seed");

    auto [eq, eq_flags] = sub("equivalence", "general vs bipartite ensemble means");
    eq_flags.add<std::string>("n-list", "comma-separated vertex counts", true)
        .add<int>("d", "degree", true)
        .add<int>("p", "depth", true)
        .add<std::string>("model", "maxcut | mis", true)
        .add<std::string>("init", "zero | plus")
        .add<int>("trials", "graphs per ensemble and n")
        .add<u64>("seed", "base seed")
        .add<std::string>("gamma", "comma-separated gammas (default: optimized)")
        .add<std::string>("beta", "comma-separated betas (default: optimized)");

    auto [ratio, ratio_flags] = sub("ratio-bound", "approximation-ratio ceiling on bipartite graphs");
    ratio_flags.add<std::string>("model", "maxcut | mis", true)
        .add<int>("d", "degree", true)
        .add<int>("p", "depth", true)
        .add<double>("tree-value", "best tree expectation")
        .add<std::string>("init", "zero | plus (with --optimize)")
        .flag("optimize", "optimize the tree expectation first");

    auto [prune, prune_flags] = sub("prune", "repair a bitstring into an independent set");
    prune_flags.add<std::string>("in", "edge-list input", true)
        .add<std::string>("bits", "0/1 string, vertex 0 first", true)
        .add<int>("d", "degree", true);

    auto [e2e, e2e_flags] = sub("end-to-end", "optimize, predict, simulate, bound, sample");
    e2e_flags.add<u64>("n", "vertex count", true)
        .add<int>("d", "degree", true)
        .add<int>("p", "depth", true)
        .add<std::string>("model", "maxcut | mis", true)
        .add<std::string>("kind", "general | bipartite")
        .add<std::string>("init", "zero | plus")
        .add<int>("resolution", "grid points per axis")
        .add<u64>("budget", "maximum grid evaluations")
        .add<int>("trials", "full-simulation graphs")
        .add<u64>("samples", "measurement samples")
        .add<u64>("seed", "base seed");

    CLI::App *run = app.add_subcommand("run", "execute the tasks in a JSON config");
    std::string config_path;
    std::string out_path;
    run->add_option("--config", config_path, "config file")->required();
    run->add_option("--out", out_path, "report output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        json report;
        if (run->parsed()) {
            std::ifstream in(config_path);
            if (!in) {
                throw lightcone::Error(lightcone::ErrorCategory::io, "cannot open '" + config_path + "'");
            }
            json config;
            try {
                config = json::parse(in);
            } catch (const json::exception &e) {
                throw lightcone::Error(lightcone::ErrorCategory::invalid_input,
                                       std::string("config is not valid JSON: ") + e.what());
            }
            report = lightcone::run_config(config);
        } else {
            for (CLI::App *cmd : app.get_subcommands()) {
                report = lightcone::run_command(cmd->get_name(), args.at(cmd->get_name()));
            }
        }
        std::string text = report.dump(2) + "\n";
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                throw lightcone::Error(lightcone::ErrorCategory::io, "cannot write '" + out_path + "'");
            }
            out << text;
        } else {
            std::cout << text;
        }
    } catch (const lightcone::Error &e) {
        return report_error(lightcone::category_name(e.category()), e.what(), lightcone::exit_code(e.category()));
    } catch (const std::exception &e) {
        return report_error("internal", e.what(), 1);
    }
    return 0;
}
