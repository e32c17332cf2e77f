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

#include <vector>

#include "lightcone/error.hpp"
#include "lightcone/graph.hpp"

namespace lightcone {

namespace {

// Simple cycles whose smallest vertex is `start`. A cycle is closed only when
// its second vertex is smaller than its last, so each of the two traversal
// directions is counted once in total.
class CycleWalker {
   public:
    CycleWalker(const Graph &g, int max_length, std::vector<std::uint64_t> &counts)
        : g_(g), max_length_(max_length), counts_(counts), on_path_(g.num_vertices(), 0) {
    }

    void run(Vertex start) {
        start_ = start;
        path_.assign(1, start);
        on_path_[start] = 1;
        extend();
        on_path_[start] = 0;
    }

   private:
    void extend() {
        Vertex tail = path_.back();
        auto length = static_cast<int>(path_.size());
        for (const Incidence &inc : g_.incident(tail)) {
            Vertex next = inc.to;
            if (next == start_) {
                if (length >= 3 && path_[1] < tail) {
                    ++counts_[static_cast<std::size_t>(length)];
                }
                continue;
            }
            if (next < start_ || on_path_[next] || length >= max_length_) {
                continue;
            }
            on_path_[next] = 1;
            path_.push_back(next);
            extend();
            path_.pop_back();
            on_path_[next] = 0;
        }
    }

    const Graph &g_;
    int max_length_;
    std::vector<std::uint64_t> &counts_;
    std::vector<std::uint8_t> on_path_;
    std::vector<Vertex> path_;
    Vertex start_ = 0;
};

}  // namespace

CycleCensus count_cycles(const Graph &g, int max_length) {
    if (max_length < 3) {
        fail_input("maximum cycle length must be at least 3");
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_length) + 1, 0);
    CycleWalker walker(g, max_length, counts);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        walker.run(s);
    }
    CycleCensus census;
    census.max_length = max_length;
    for (int k = 3; k <= max_length; ++k) {
        census.counts[k] = counts[static_cast<std::size_t>(k)];
    }
    return census;
}

}  // namespace lightcone
