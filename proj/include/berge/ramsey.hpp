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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "berge/core.hpp"
#include "berge/random.hpp"

namespace berge {

/// Colour per edge of a base graph. Colours are non-negative ids; downstream
/// they are hyperedge indices.
class EdgeColoring {
public:
    EdgeColoring() = default;
    /// `colors[i]` belongs to `base.edges()[i]`.
    EdgeColoring(Graph base, std::vector<int> colors);

    const Graph& base() const { return base_; }
    const std::vector<int>& colors() const { return colors_; }
    /// -1 when {a,b} is not an edge of the base graph.
    int color(Vertex a, Vertex b) const;

private:
    Graph base_;
    std::vector<int> colors_;
    std::vector<int> matrix_;
};

bool is_proper(const EdgeColoring& c);
bool is_rainbow(const EdgeColoring& c, std::span<const Edge> edges);

Graph complete_graph(int n);
/// K_{s,m} with the s-side on vertices 0..s-1.
Graph complete_bipartite(int s, int m);

/// Colours edges in random order with the least colour free at both endpoints.
EdgeColoring random_proper_coloring(const Graph& base, Rng& rng);

/// Greedy maximal rainbow clique grown from every seed vertex in turn; the
/// first one reaching r vertices is cut to its first r members.
std::optional<std::vector<Vertex>> find_rainbow_clique(const EdgeColoring& c, int r);

struct RainbowBiclique {
    std::vector<Vertex> s_side;
    std::vector<Vertex> t_side;

    std::vector<Edge> edges() const;
};

/// Grows the column set greedily over `columns` (ascending) while all
/// `rows` x columns edges keep distinct colours.
std::optional<RainbowBiclique> find_rainbow_biclique(const EdgeColoring& c, std::span<const Vertex> rows,
                                                     std::span<const Vertex> columns, int t);

/// Convenience form for a coloured K_{s,M} built by complete_bipartite(s, M).
std::optional<RainbowBiclique> find_rainbow_biclique(const EdgeColoring& c, int s, int t);

/// Red/blue colouring of K_order stored as a bitmask over edges in
/// lexicographic order; a set bit means red.
struct TwoColoring {
    int order = 0;
    std::uint32_t red_mask = 0;

    static int edge_index(int order, Vertex a, Vertex b);
    static int edge_count(int order) { return order * (order - 1) / 2; }

    bool red(Vertex a, Vertex b) const { return (red_mask >> edge_index(order, a, b)) & 1U; }
    std::vector<Edge> red_edges() const;
    std::vector<Edge> blue_edges() const;
};

struct Substructure {
    enum class Kind { red_k4_minus, blue_matching, blue_triangle, monochromatic_triangle };
    Kind kind = Kind::red_k4_minus;
    /// Matching size for blue_matching.
    int size = 0;

    static Substructure red_k4_minus() { return {Kind::red_k4_minus, 0}; }
    static Substructure blue_matching(int k) { return {Kind::blue_matching, k}; }
    static Substructure blue_triangle() { return {Kind::blue_triangle, 0}; }
    static Substructure monochromatic_triangle() { return {Kind::monochromatic_triangle, 0}; }
};

bool has_substructure(const TwoColoring& c, Substructure s);

/// The disjunction checked for K_5, K_6 and K_7 colourings.
bool ramsey_lemma_holds(const TwoColoring& c);

struct RamseyVerdict {
    int order = 0;
    std::uint64_t colorings_checked = 0;
    std::optional<std::uint32_t> counterexample;
};

RamseyVerdict verify_ramsey_lemma(int order, int workers = 1);

/// Exhaustive monochromatic-triangle check over all colourings of K_order.
RamseyVerdict verify_monochromatic_triangle(int order, int workers = 1);

struct RainbowTrials {
    std::uint64_t trials = 0;
    /// Finder returned nothing.
    std::uint64_t misses = 0;
    /// Finder returned something that is not rainbow (must stay zero).
    std::uint64_t bad_outputs = 0;
};

/// Random proper colourings of K_vertices; trial i uses split_seed(seed, i).
RainbowTrials rainbow_clique_trials(int r, int vertices, std::uint64_t trials, std::uint64_t seed, int workers = 1);

/// Random proper colourings of K_{s,columns}.
RainbowTrials rainbow_biclique_trials(int s, int t, int columns, std::uint64_t trials, std::uint64_t seed,
                                      int workers = 1);

}  // namespace berge
