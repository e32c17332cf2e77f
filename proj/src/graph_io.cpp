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
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lightcone/error.hpp"
#include "lightcone/graph.hpp"

namespace lightcone {

namespace {

bool next_content_line(std::istream &in, std::string &line) {
    while (std::getline(in, line)) {
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] != '#') {
            return true;
        }
    }
    return false;
}

}  // namespace

Graph read_edge_list(std::istream &in) {
    std::string line;
    if (!next_content_line(in, line)) {
        fail_input("edge list is empty");
    }
    std::istringstream header(line);
    long long n = -1;
    long long m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) {
        fail_input("edge list header must be 'n m'");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) {
            fail_input("edge list ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
        }
        std::istringstream row(line);
        long long u = -1;
        long long v = -1;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra) || u < 0 || v < 0) {
            fail_input("malformed edge line: '" + line + "'");
        }
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    Graph g(static_cast<std::size_t>(n), edges);
    if (next_content_line(in, line)) {
        const std::string prefix = "bipartition:";
        if (line.rfind(prefix, 0) != 0) {
            fail_input("unexpected trailing line: '" + line + "'");
        }
        std::istringstream rest(line.substr(prefix.size()));
        std::string labels;
        rest >> labels;
        std::vector<std::uint8_t> sides;
        for (char c : labels) {
            if (c != '0' && c != '1') {
                fail_input("bipartition must be a 0/1 string");
            }
            sides.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        g.set_bipartition(std::move(sides));
        if (next_content_line(in, line)) {
            fail_input("unexpected content after bipartition line");
        }
    }
    return g;
}

Graph read_edge_list_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCategory::io, "cannot open '" + path + "'");
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream &out, const Graph &g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge &e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    if (const auto &sides = g.bipartition()) {
        out << "bipartition: ";
        for (std::uint8_t s : *sides) {
            out << static_cast<char>('0' + s);
        }
        out << '\n';
    }
}

void write_edge_list_file(const std::string &path, const Graph &g) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCategory::io, "cannot write '" + path + "'");
    }
    write_edge_list(out, g);
}

}  // namespace lightcone
