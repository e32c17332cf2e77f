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
#include <string>
#include <string_view>
#include <vector>

#include "lightcone/graph.hpp"

namespace lightcone {

enum class Problem { max_cut, mis };

std::string_view problem_name(Problem problem);
Problem parse_problem(std::string_view name);

/// Exact fraction with positive denominator, kept in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational reduced(std::int64_t num, std::int64_t den);
    double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    friend bool operator==(const Rational &, const Rational &) = default;
};

/// Per-edge cost: Max-Cut counts disagreeing endpoints; MIS rewards occupied
/// endpoints with weight 1/(2d) each and penalizes occupied edges by 1.
/// All edge costs are integers over a common denominator (scale()).
class CostModel {
   public:
    static CostModel max_cut() {
        return CostModel(Problem::max_cut, 0);
    }
    static CostModel mis(int degree);

    Problem problem() const {
        return problem_;
    }
    int degree() const {
        return degree_;
    }
    std::int64_t scale() const {
        return problem_ == Problem::max_cut ? 1 : 2 * static_cast<std::int64_t>(degree_);
    }

    std::int64_t scaled_edge_cost(bool bi, bool bj) const {
        if (problem_ == Problem::max_cut) {
            return bi != bj ? 1 : 0;
        }
        return static_cast<std::int64_t>(bi) + static_cast<std::int64_t>(bj) - (bi && bj ? scale() : 0);
    }

    double edge_cost_value(bool bi, bool bj) const {
        return static_cast<double>(scaled_edge_cost(bi, bj)) / static_cast<double>(scale());
    }

    friend bool operator==(const CostModel &, const CostModel &) = default;

   private:
    CostModel(Problem problem, int degree) : problem_(problem), degree_(degree) {
    }

    Problem problem_;
    int degree_;
};

Rational edge_cost(const CostModel &model, bool bi, bool bj);

/// One byte per vertex, each 0 or 1.
using Bitstring = std::vector<std::uint8_t>;

Bitstring parse_bitstring(std::string_view text);
std::string to_string(const Bitstring &bits);
/// Bit i of `index` becomes entry i.
Bitstring bitstring_from_index(std::uint64_t index, std::size_t length);
std::uint64_t index_from_bitstring(const Bitstring &bits);

/// Sum of scaled edge costs; exact.
std::int64_t scaled_cost_value(const CostModel &model, const Graph &g, const Bitstring &bits);
Rational exact_cost_value(const CostModel &model, const Graph &g, const Bitstring &bits);
double cost_value(const CostModel &model, const Graph &g, const Bitstring &bits);

}  // namespace lightcone
