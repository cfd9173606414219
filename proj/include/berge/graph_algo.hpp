// Copyright 2026 The berge-turan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "berge/core.hpp"

namespace berge {

/// Non-induced subgraph search. The result maps each pattern vertex of
/// positive degree to a distinct host vertex (isolated pattern vertices map
/// to -1). With `required`, only copies that use that host edge are reported.
std::optional<std::vector<Vertex>> find_subgraph(const Graph& host, const Graph& pattern,
                                                 std::optional<Edge> required = std::nullopt);

inline bool contains_subgraph(const Graph& host, const Graph& pattern) {
    return find_subgraph(host, pattern).has_value();
}

/// A K_{2,t}: the two-vertex side and t common neighbours.
struct K2t {
    Vertex x = 0;
    Vertex y = 0;
    std::vector<Vertex> common;
};

std::optional<K2t> find_k2t(const Graph& g, int t);

/// Largest number of common neighbours over all vertex pairs.
int max_common_neighbors(const Graph& g);

/// 0/1 side per vertex if the graph is bipartite; each component's lowest
/// vertex goes to side 0.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// Length of the shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

/// True if some cycle of length in [lo, hi] is a subgraph.
bool has_cycle_between(const Graph& g, int lo, int hi);

}  // namespace berge
