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

#include <cmath>
#include <string>

#include "lightcone/error.hpp"
#include "lightcone/experiments.hpp"

namespace lightcone {

namespace {

constexpr double kCeilingSlack = 1e-12;

}  // namespace

double LiteratureConstants::sigma_large_d(int d) {
    if (d < 2) {
        fail_input("large-d independence bound needs d >= 2");
    }
    return 2.0 * std::log(static_cast<double>(d)) / static_cast<double>(d);
}

RatioReport ratio_ceiling(Problem problem, int d, int p, double best_tree_value) {
    if (d < 1 || p < 0) {
        fail_input("ratio ceiling needs d >= 1 and p >= 0");
    }
    RatioReport report;
    report.problem = problem;
    report.degree = d;
    report.depth = p;
    report.tree_value = best_tree_value;
    if (problem == Problem::max_cut) {
        report.large_d_statement =
            "approximation ratio no better than 1/2 as d grows; " + std::string(LiteratureConstants::rho_large_d_form);
        if (d != 3) {
            throw Error(ErrorCategory::no_constant,
                        "no numeric Max-Cut constant rho_d available for d=" + std::to_string(d) + " (" +
                            std::string(LiteratureConstants::rho_large_d_form) + ")");
        }
        report.ceiling = 2.0 * LiteratureConstants::rho3_upper / 3.0;
        report.achieved_ratio = best_tree_value;
        report.provenance = LiteratureConstants::rho3_provenance;
    } else {
        report.large_d_statement = "approximation ratio goes to 0 as d grows; sigma_d <= 2 ln(d) / d";
        if (d == 3) {
            report.ceiling = 2.0 * LiteratureConstants::sigma3_upper;
            report.provenance = LiteratureConstants::sigma3_provenance;
        } else if (d >= 4) {
            report.ceiling = 2.0 * LiteratureConstants::sigma_large_d(d);
            report.asymptotic_constant = true;
            report.provenance = LiteratureConstants::sigma_large_d_provenance;
        } else {
            throw Error(ErrorCategory::no_constant,
                        "no independence-ratio constant sigma_d available for d=" + std::to_string(d));
        }
        report.achieved_ratio = static_cast<double>(d) * best_tree_value;
    }
    report.within_ceiling = report.achieved_ratio <= report.ceiling + kCeilingSlack;
    return report;
}

}  // namespace lightcone
