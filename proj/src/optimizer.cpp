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
#include <numbers>
#include <numeric>
#include <string>

#include "lightcone/error.hpp"
#include "lightcone/optimizer.hpp"

namespace lightcone {

namespace {

// r^(2p), or nullopt once it exceeds `limit`.
std::optional<std::uint64_t> grid_size(int resolution, int depth, std::uint64_t limit) {
    std::uint64_t total = 1;
    for (int axis = 0; axis < 2 * depth; ++axis) {
        if (total > limit / static_cast<std::uint64_t>(resolution)) {
            return std::nullopt;
        }
        total *= static_cast<std::uint64_t>(resolution);
    }
    return total <= limit ? std::optional(total) : std::nullopt;
}

QaoaParams grid_point(std::uint64_t index, int resolution, const SearchDomain &domain) {
    const int axes = 2 * domain.depth;
    std::vector<double> flat(static_cast<std::size_t>(axes));
    for (int axis = axes - 1; axis >= 0; --axis) {
        auto digit = static_cast<double>(index % static_cast<std::uint64_t>(resolution));
        index /= static_cast<std::uint64_t>(resolution);
        double period = axis < domain.depth ? domain.gamma_period : domain.beta_period;
        flat[static_cast<std::size_t>(axis)] = digit * period / resolution;
    }
    return QaoaParams::from_flattened(flat);
}

}  // namespace

SearchDomain SearchDomain::for_model(const CostModel &model, int depth) {
    return {2.0 * std::numbers::pi * static_cast<double>(model.scale()), std::numbers::pi, depth};
}

int default_resolution(int depth, std::uint64_t budget) {
    if (depth <= 0) {
        return 2;
    }
    int preferred = depth == 1 ? 64 : depth == 2 ? 16 : 1 << 20;
    int r = 2;
    while (r < preferred && grid_size(r + 1, depth, budget)) {
        ++r;
    }
    return r;
}

OptResult grid_search(const TreeObjective &objective, int resolution, std::uint64_t budget) {
    if (resolution < 2) {
        fail_input("grid resolution must be at least 2");
    }
    const int p = objective.radius();
    auto total = grid_size(resolution, p, budget);
    if (!total) {
        fail_resource("grid of " + std::to_string(resolution) + "^" + std::to_string(2 * p) +
                      " points exceeds the evaluation budget of " + std::to_string(budget));
    }
    const SearchDomain domain = SearchDomain::for_model(objective.model(), p);
    const auto count = static_cast<std::int64_t>(*total);
    std::vector<Evaluation> trace(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
        Evaluation &ev = trace[static_cast<std::size_t>(i)];
        ev.params = grid_point(static_cast<std::uint64_t>(i), resolution, domain);
        ev.value = objective(ev.params);
    }
    // Enumeration order is lexicographic in the flattened vector, so the first
    // maximum is the tie-break winner.
    std::size_t best = 0;
    for (std::size_t i = 1; i < trace.size(); ++i) {
        if (trace[i].value > trace[best].value) {
            best = i;
        }
    }
    OptResult result;
    result.best_params = trace[best].params;
    result.best_value = trace[best].value;
    result.trace = std::move(trace);
    result.grid_resolution = resolution;
    return result;
}

OptResult grid_search(int d, int p, const CostModel &model, InitialState initial, int resolution,
                      std::uint64_t budget) {
    return grid_search(TreeObjective(d, p, model, initial), resolution, budget);
}

OptResult refine(const TreeObjective &objective, const QaoaParams &start, const RefineOptions &options) {
    if (!(options.tolerance > 0.0)) {
        fail_input("refinement tolerance must be positive");
    }
    std::vector<double> point = start.flattened();
    std::vector<double> steps = options.initial_steps;
    if (steps.empty()) {
        steps.assign(point.size(), 0.1);
    }
    if (steps.size() != point.size()) {
        fail_input("initial step count does not match the parameter count");
    }

    OptResult result;
    double best = objective(start);
    result.trace.push_back({start, best});
    auto largest_step = [&] { return steps.empty() ? 0.0 : *std::max_element(steps.begin(), steps.end()); };

    while (largest_step() >= options.tolerance) {
        if (result.refinement_iterations >= options.max_iterations) {
            result.converged = false;
            break;
        }
        ++result.refinement_iterations;
        bool improved = false;
        for (std::size_t axis = 0; axis < point.size(); ++axis) {
            for (double sign : {1.0, -1.0}) {
                std::vector<double> candidate = point;
                candidate[axis] += sign * steps[axis];
                QaoaParams params = QaoaParams::from_flattened(candidate);
                double value = objective(params);
                result.trace.push_back({params, value});
                if (value > best) {
                    best = value;
                    point = std::move(candidate);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            for (double &s : steps) {
                s *= 0.5;
            }
        }
    }
    result.best_params = QaoaParams::from_flattened(point);
    result.best_value = best;
    return result;
}

OptResult refine(const QaoaParams &start, int d, int p, const CostModel &model, InitialState initial,
                 double tolerance) {
    RefineOptions options;
    options.tolerance = tolerance;
    return refine(TreeObjective(d, p, model, initial), start, options);
}

OptResult optimize(const TreeObjective &objective, const OptimizerConfig &config) {
    const int p = objective.radius();
    if (p == 0) {
        OptResult result;
        result.best_params = QaoaParams::zeros(0);
        result.best_value = objective(result.best_params);
        result.trace.push_back({result.best_params, result.best_value});
        return result;
    }
    const int resolution = config.resolution > 0 ? config.resolution : default_resolution(p, config.budget);
    OptResult grid = grid_search(objective, resolution, config.budget);

    std::vector<std::size_t> order(grid.trace.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return grid.trace[a].value > grid.trace[b].value; });
    const auto starts = std::min<std::size_t>(static_cast<std::size_t>(std::max(config.top_k, 1)), order.size());

    const SearchDomain domain = SearchDomain::for_model(objective.model(), p);
    RefineOptions refine_options;
    refine_options.tolerance = config.tolerance;
    refine_options.initial_steps.assign(static_cast<std::size_t>(p), 0.5 * domain.gamma_period / resolution);
    refine_options.initial_steps.resize(static_cast<std::size_t>(2 * p), 0.5 * domain.beta_period / resolution);

    std::vector<OptResult> refined(starts);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(starts); ++i) {
        const auto k = static_cast<std::size_t>(i);
        refined[k] = refine(objective, grid.trace[order[k]].params, refine_options);
    }

    OptResult result;
    result.grid_resolution = resolution;
    result.best_params = grid.best_params;
    result.best_value = grid.best_value;
    result.trace = std::move(grid.trace);
    for (OptResult &r : refined) {
        if (r.best_value > result.best_value) {
            result.best_value = r.best_value;
            result.best_params = r.best_params;
        }
        result.refinement_iterations += r.refinement_iterations;
        result.converged = result.converged && r.converged;
        result.trace.insert(result.trace.end(), std::make_move_iterator(r.trace.begin()),
                            std::make_move_iterator(r.trace.end()));
    }
    return result;
}

OptResult optimize(int d, int p, const CostModel &model, InitialState initial, const OptimizerConfig &config) {
    return optimize(TreeObjective(d, p, model, initial), config);
}

}  // namespace lightcone
