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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "berge/containment.hpp"
#include "berge/core.hpp"

namespace berge {

/// A shadow-graph edge together with the index of the hyperedge it was
/// embedded into (its colour).
struct ColoredEdge {
    Edge edge;
    std::size_t color = 0;

    auto operator<=>(const ColoredEdge&) const = default;
};

/// The point where a greedy embedding got stuck: every pair inside
/// `saturated` (or enough of them) was already used by earlier hyperedges.
struct EmbeddingViolation {
    std::size_t hyperedge = 0;
    std::vector<Vertex> saturated;
    /// Previously embedded edges inside `saturated`, coloured by source hyperedge.
    std::vector<ColoredEdge> colors;
    std::string reason;
};

struct EmbeddingOutcome {
    Graph shadow;
    /// One edge set per hyperedge in input order; empty for skipped hyperedges
    /// and for everything from the violating hyperedge on.
    std::vector<std::vector<Edge>> per_hyperedge;
    std::optional<EmbeddingViolation> violation;

    bool ok() const { return !violation.has_value(); }
    std::size_t edges_embedded() const { return shadow.size(); }
};

/// One previously unused pair per hyperedge.
EmbeddingOutcome embed_unique_edges(const Hypergraph& h);

/// The size threshold T below which hyperedges are skipped: r^3 for K_r and
/// s + s(s-1)(t-1) + t for K_{s,t}.
long matching_threshold(const Pattern& p);

/// A greedy maximal matching of unused pairs in every hyperedge of size >= T;
/// fails when one is smaller than (|h| - T) / 2.
EmbeddingOutcome embed_matchings(const Hypergraph& h, const Pattern& p);

/// ceil((|h| - 3) / 2) independent unused pairs per hyperedge of size >= 4.
EmbeddingOutcome embed_c4_matchings(const Hypergraph& h);

/// |h| - 3 unused edges per hyperedge of size >= 4, forming disjoint
/// triangles plus at most three independent edges.
EmbeddingOutcome embed_triangles_and_edges(const Hypergraph& h);

/// Processes hyperedges in a seeded random order; per_hyperedge stays indexed
/// by the original positions.
EmbeddingOutcome embed_shuffled(const Hypergraph& h, std::uint64_t seed,
                                const std::function<EmbeddingOutcome(const Hypergraph&)>& procedure);

struct LiftedWitness {
    /// The rainbow subgraph relabelled onto 0..k-1.
    std::vector<Edge> pattern_edges;
    BergeWitness witness;
};

/// Turns a rainbow subgraph (distinct colours, each colour a hyperedge
/// containing its edge) into a Berge witness.
LiftedWitness lift_rainbow_to_berge(const Hypergraph& h, const EmbeddingViolation& violation,
                                    const std::vector<ColoredEdge>& rainbow);

/// Finds a rainbow copy of `pattern` on the violation's saturated set, using
/// the violation's colours plus the violating hyperedge, and lifts it.
std::optional<LiftedWitness> extract_witness(const Hypergraph& h, const EmbeddingViolation& violation,
                                             const Pattern& pattern);

}  // namespace berge
