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

#include <cstdint>
#include <vector>

#include "lightcone/tree.hpp"

namespace lightcone {

/// Box [0, gamma_period)^p x [0, beta_period)^p. The cost spectrum is integer
/// for Max-Cut and lies in (1/2d) Z for MIS on the tree, so gamma repeats with
/// period 2 pi or 4 pi d; exp(-i pi X) is a global phase, so beta repeats with
/// period pi.
struct SearchDomain {
    double gamma_period = 0.0;
    double beta_period = 0.0;
    int depth = 0;

    static SearchDomain for_model(const CostModel &model, int depth);
};

struct Evaluation {
    QaoaParams params;
    double value = 0.0;
};

struct OptResult {
    QaoaParams best_params;
    double best_value = 0.0;
    std::vector<Evaluation> trace;
    int grid_resolution = 0;
    int refinement_iterations = 0;
    bool converged = true;
};

inline constexpr std::uint64_t kDefaultEvaluationBudget = 1'000'000;

/// 64 points per axis at p = 1, 16 at p = 2, otherwise the largest
/// resolution whose grid fits in the budget (at least 2).
int default_resolution(int depth, std::uint64_t budget = kDefaultEvaluationBudget);

/// Exhaustive uniform grid. Ties go to the lexicographically smallest
/// (gamma_1..gamma_p, beta_1..beta_p).
OptResult grid_search(const TreeObjective &objective, int resolution,
                      std::uint64_t budget = kDefaultEvaluationBudget);
OptResult grid_search(int d, int p, const CostModel &model, InitialState initial, int resolution,
                      std::uint64_t budget = kDefaultEvaluationBudget);

struct RefineOptions {
    double tolerance = 1e-8;
    /// Starting step per coordinate; empty means 0.1 for every axis.
    std::vector<double> initial_steps;
    int max_iterations = 20000;
};

/// Compass search: try +/- step along each coordinate, keep any strict
/// improvement, halve all steps when none helps. Stops once every step is
/// below the tolerance. The result never scores below `start`.
OptResult refine(const TreeObjective &objective, const QaoaParams &start, const RefineOptions &options = {});
OptResult refine(const QaoaParams &start, int d, int p, const CostModel &model, InitialState initial,
                 double tolerance);

struct OptimizerConfig {
    int resolution = 0;  // 0 selects default_resolution
    std::uint64_t budget = kDefaultEvaluationBudget;
    int top_k = 5;
    double tolerance = 1e-8;
};

/// Grid search, then refinement from the top_k grid points.
OptResult optimize(const TreeObjective &objective, const OptimizerConfig &config = {});
OptResult optimize(int d, int p, const CostModel &model, InitialState initial, const OptimizerConfig &config = {});

}  // namespace lightcone
