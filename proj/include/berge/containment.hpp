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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berge/core.hpp"

namespace berge {

struct EdgeAssignment {
    Edge pattern_edge;
    std::size_t hyperedge = 0;

    auto operator<=>(const EdgeAssignment&) const = default;
};

/// Proof that a hypergraph contains a Berge copy of a pattern: where each
/// pattern vertex goes, and which hyperedge carries each pattern edge.
struct BergeWitness {
    std::map<Vertex, Vertex> vertex_map;
    std::vector<EdgeAssignment> edge_assignment;

    bool operator==(const BergeWitness&) const = default;
};

struct ContainmentOptions {
    /// Patterns with more positive-degree vertices are refused.
    int vertex_guard = 8;
    int workers = 1;
    /// Lex-leader symmetry breaking over pattern automorphisms.
    bool automorphism_pruning = false;
    /// Only report copies that use this hyperedge.
    std::optional<std::size_t> required_hyperedge;
};

std::optional<BergeWitness> contains_berge(const Hypergraph& h, const Pattern& p,
                                           const ContainmentOptions& options = {});

struct WitnessCheck {
    bool ok = false;
    std::string reason;

    explicit operator bool() const { return ok; }
};

WitnessCheck verify_witness(const Hypergraph& h, const Pattern& p, const BergeWitness& w);

/// Same check against an explicit edge list (parallel edges allowed).
WitnessCheck verify_witness(const Hypergraph& h, const std::vector<Edge>& pattern_edges, const BergeWitness& w);

bool is_linear(const Hypergraph& h);

/// First pair of distinct hyperedges (by index) sharing at least two vertices.
std::optional<std::pair<std::size_t, std::size_t>> find_c2_pair(const Hypergraph& h);

struct GirthReport {
    /// Smallest k with a Berge-C_k; empty means "at least g_max + 1".
    std::optional<int> girth;
    int g_max = 0;
    std::optional<BergeWitness> witness;
    std::optional<std::pair<std::size_t, std::size_t>> c2_pair;

    /// The girth if known, otherwise g_max + 1 as a lower bound.
    int lower_bound() const { return girth ? *girth : g_max + 1; }
};

GirthReport berge_girth(const Hypergraph& h, int g_max, const ContainmentOptions& options = {});

}  // namespace berge
