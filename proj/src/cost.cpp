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

#include <numeric>
#include <string>

#include "lightcone/cost.hpp"
#include "lightcone/error.hpp"

namespace lightcone {

std::string_view problem_name(Problem problem) {
    return problem == Problem::max_cut ? "maxcut" : "mis";
}

Problem parse_problem(std::string_view name) {
    if (name == "maxcut") {
        return Problem::max_cut;
    }
    if (name == "mis") {
        return Problem::mis;
    }
    fail_input("unknown model '" + std::string(name) + "' (expected maxcut or mis)");
}

Rational Rational::reduced(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        fail_input("zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

CostModel CostModel::mis(int degree) {
    if (degree < 1) {
        fail_input("MIS cost needs degree >= 1");
    }
    return CostModel(Problem::mis, degree);
}

Rational edge_cost(const CostModel &model, bool bi, bool bj) {
    return Rational::reduced(model.scaled_edge_cost(bi, bj), model.scale());
}

Bitstring parse_bitstring(std::string_view text) {
    Bitstring bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            fail_input("bitstring must contain only 0 and 1");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return bits;
}

std::string to_string(const Bitstring &bits) {
    std::string out;
    out.reserve(bits.size());
    for (std::uint8_t b : bits) {
        out.push_back(static_cast<char>('0' + b));
    }
    return out;
}

Bitstring bitstring_from_index(std::uint64_t index, std::size_t length) {
    Bitstring bits(length);
    for (std::size_t i = 0; i < length; ++i) {
        bits[i] = static_cast<std::uint8_t>((index >> i) & 1U);
    }
    return bits;
}

std::uint64_t index_from_bitstring(const Bitstring &bits) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        index |= static_cast<std::uint64_t>(bits[i] & 1U) << i;
    }
    return index;
}

std::int64_t scaled_cost_value(const CostModel &model, const Graph &g, const Bitstring &bits) {
    if (bits.size() != g.num_vertices()) {
        fail_input("bitstring length " + std::to_string(bits.size()) + " does not match " +
                   std::to_string(g.num_vertices()) + " vertices");
    }
    std::int64_t total = 0;
    for (const Edge &e : g.edges()) {
        total += model.scaled_edge_cost(bits[e.u] != 0, bits[e.v] != 0);
    }
    return total;
}

Rational exact_cost_value(const CostModel &model, const Graph &g, const Bitstring &bits) {
    return Rational::reduced(scaled_cost_value(model, g, bits), model.scale());
}

double cost_value(const CostModel &model, const Graph &g, const Bitstring &bits) {
    return exact_cost_value(model, g, bits).value();
}

}  // namespace lightcone
