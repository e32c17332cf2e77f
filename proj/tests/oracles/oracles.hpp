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

// Independent reference computations for the test suites. Nothing here calls
// into the simulator kernels.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "lightcone/graph.hpp"

namespace lightcone::oracle {

using cd = std::complex<double>;
using Matrix = std::vector<std::vector<cd>>;

inline Matrix identity(std::size_t n) {
    Matrix m(n, std::vector<cd>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Matrix multiply(const Matrix &a, const Matrix &b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<cd>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

// kron(a, b)[(i1*nb + i2)][(j1*nb + j2)] = a[i1][j1] b[i2][j2]
inline Matrix kron(const Matrix &a, const Matrix &b) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    Matrix c(na * nb, std::vector<cd>(na * nb, 0.0));
    for (std::size_t i1 = 0; i1 < na; ++i1) {
        for (std::size_t j1 = 0; j1 < na; ++j1) {
            for (std::size_t i2 = 0; i2 < nb; ++i2) {
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    c[i1 * nb + i2][j1 * nb + j2] = a[i1][j1] * b[i2][j2];
                }
            }
        }
    }
    return c;
}

/// Edge cost written straight from the formulas: b_i + b_j - 2 b_i b_j, or
/// (b_i + b_j) / (2d) - b_i b_j.
inline double formula_edge_cost(bool mis, int d, int bi, int bj) {
    if (!mis) {
        return bi + bj - 2.0 * bi * bj;
    }
    return (bi + bj) / (2.0 * d) - static_cast<double>(bi * bj);
}

/// Dense U = U_B(beta_p) U_C(gamma_p) ... U_B(beta_1) U_C(gamma_1) applied to
/// the initial vector. Qubit 0 is the least significant index bit, so the
/// mixer is M (x) ... (x) M with qubit m-1 as the leftmost factor.
inline std::vector<cd> dense_qaoa(const Graph &g, bool mis, int d, const std::vector<double> &gammas,
                                  const std::vector<double> &betas, bool plus_initial) {
    const std::size_t m = g.num_vertices();
    const std::size_t dim = std::size_t{1} << m;
    std::vector<double> cost(dim, 0.0);
    for (std::size_t b = 0; b < dim; ++b) {
        for (const Edge &e : g.edges()) {
            cost[b] += formula_edge_cost(mis, d, static_cast<int>((b >> e.u) & 1U), static_cast<int>((b >> e.v) & 1U));
        }
    }
    Matrix u = identity(dim);
    for (std::size_t layer = 0; layer < gammas.size(); ++layer) {
        Matrix uc(dim, std::vector<cd>(dim, 0.0));
        for (std::size_t b = 0; b < dim; ++b) {
            uc[b][b] = std::exp(cd(0.0, -gammas[layer] * cost[b]));
        }
        const double c = std::cos(betas[layer]);
        const double s = std::sin(betas[layer]);
        Matrix rx = {{c, cd(0.0, -s)}, {cd(0.0, -s), c}};
        Matrix ub = identity(1);
        for (std::size_t q = 0; q < m; ++q) {
            ub = kron(ub, rx);
        }
        u = multiply(ub, multiply(uc, u));
    }
    std::vector<cd> init(dim, 0.0);
    if (plus_initial) {
        std::fill(init.begin(), init.end(), cd(std::pow(2.0, -0.5 * static_cast<double>(m)), 0.0));
    } else {
        init[0] = 1.0;
    }
    std::vector<cd> out(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            out[i] += u[i][j] * init[j];
        }
    }
    return out;
}

/// Depth-1 Max-Cut edge expectation from |+>^n when both endpoints have
/// degree d and the edge lies in no triangle.
inline double maxcut_p1_triangle_free(int d, double gamma, double beta) {
    return 0.5 + 0.5 * std::sin(4.0 * beta) * std::sin(gamma) * std::pow(std::cos(gamma), d - 1);
}

/// Simple k-cycles by enumerating every ordered sequence of k distinct
/// vertices; each cycle appears 2k times.
inline std::uint64_t brute_force_cycles(const Graph &g, int k) {
    const std::size_t n = g.num_vertices();
    std::uint64_t sequences = 0;
    std::vector<Vertex> seq;
    std::vector<std::uint8_t> used(n, 0);
    auto adjacent = [&](Vertex a, Vertex b) { return g.find_edge(a, b).has_value(); };
    auto rec = [&](auto &&self) -> void {
        if (static_cast<int>(seq.size()) == k) {
            if (adjacent(seq.back(), seq.front())) {
                ++sequences;
            }
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[v] || (!seq.empty() && !adjacent(seq.back(), v))) {
                continue;
            }
            used[v] = 1;
            seq.push_back(v);
            self(self);
            seq.pop_back();
            used[v] = 0;
        }
    };
    rec(rec);
    return sequences / (2 * static_cast<std::uint64_t>(k));
}

/// Exact mean number of k-cycles in the (unconditioned) configuration model.
inline double configuration_model_cycle_mean(std::size_t n, int d, int k) {
    const double stubs = static_cast<double>(n) * d;
    double value = 1.0 / (2.0 * k);
    for (int i = 0; i < k; ++i) {
        value *= static_cast<double>(n - static_cast<std::size_t>(i)) * d * (d - 1) / (stubs - 1.0 - 2.0 * i);
    }
    return value;
}

/// Same for the bipartite configuration model (even k only).
inline double bipartite_configuration_model_cycle_mean(std::size_t n, int d, int k) {
    if (k % 2 != 0) {
        return 0.0;
    }
    const double side = static_cast<double>(n) / 2.0;
    const double stubs = side * d;
    double value = 1.0 / k;
    for (int i = 0; i < k / 2; ++i) {
        value *= (side - i) * (side - i);
    }
    for (int i = 0; i < k; ++i) {
        value *= static_cast<double>(d) * (d - 1) / (stubs - i);
    }
    return value;
}

}  // namespace lightcone::oracle
